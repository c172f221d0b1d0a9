#pragma once

#include <vector>

#include <gmpxx.h>

namespace hydrorad::specfun {

inline constexpr int kMaxLaguerreDegree = 200;

/// Exact power-series coefficients c_0..c_p of the associated Laguerre
/// polynomial L_p^(q)(x) = sum_i c_i x^i, c_i = (-1)^i binom(p+q, p-i) / i!.
/// Throws PrecisionOverflow for p > kMaxLaguerreDegree, DomainError for
/// negative p or q.
std::vector<mpq_class> assoc_laguerre_coeffs(int p, int q);

/// Evaluates an exact coefficient list at a rational point.
mpq_class evaluate_polynomial(const std::vector<mpq_class>& coeffs, const mpq_class& x);

}  // namespace hydrorad::specfun
