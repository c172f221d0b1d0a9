#pragma once

namespace hydrorad::quantum {

/// Gaunt-type integral of Y*_{l' m'} Y_{l1 m1} Y_{l2 m2} over the sphere,
///   sqrt[(2 l1 + 1)(2 l2 + 1) / (4 pi (2 l' + 1))] <l1 0 l2 0|l' 0> <l1 m1 l2 m2|l' m'>.
/// Exactly 0 when a selection rule fails.
double angular_lambda(int l_prime, int m_prime, int l1, int m1, int l2, int m2);

/// True if |l - l'| is 0 or 2 and not l = l' = 0.
bool e2_allowed(int l, int l_final);

}  // namespace hydrorad::quantum
