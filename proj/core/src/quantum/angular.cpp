#include "hydrorad/quantum/angular.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hydrorad/specfun/wigner.hpp"

namespace hydrorad::quantum {

double angular_lambda(int l_prime, int m_prime, int l1, int m1, int l2, int m2) {
  using specfun::clebsch_gordan_exact;
  using specfun::HalfInt;
  if (m1 + m2 != m_prime) return 0.0;
  const auto h = [](int v) { return HalfInt::from_int(v); };
  const auto parity = clebsch_gordan_exact(h(l1), h(0), h(l2), h(0), h(l_prime), h(0));
  if (parity.is_zero()) return 0.0;
  const auto coupling = clebsch_gordan_exact(h(l1), h(m1), h(l2), h(m2), h(l_prime), h(m_prime));
  if (coupling.is_zero()) return 0.0;
  mpq_class degeneracy((2 * l1 + 1) * (2 * l2 + 1), 2 * l_prime + 1);
  degeneracy.canonicalize();
  const specfun::Surd exact =
      specfun::Surd{mpq_class(1), degeneracy} * parity.exact() * coupling.exact();
  return exact.to_double() / std::sqrt(4.0 * std::numbers::pi);
}

bool e2_allowed(int l, int l_final) {
  const int dl = std::abs(l - l_final);
  if (dl != 0 && dl != 2) return false;
  return !(l == 0 && l_final == 0);
}

}  // namespace hydrorad::quantum
