#include "hydrorad/specfun/laguerre.hpp"

#include <string>

#include "hydrorad/errors.hpp"

namespace hydrorad::specfun {

std::vector<mpq_class> assoc_laguerre_coeffs(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("assoc_laguerre_coeffs: p and q must be >= 0");
  if (p > kMaxLaguerreDegree) {
    throw PrecisionOverflow("assoc_laguerre_coeffs: degree " + std::to_string(p) +
                            " exceeds cap " + std::to_string(kMaxLaguerreDegree));
  }
  std::vector<mpq_class> c(p + 1);
  mpz_class binom, fact = 1;
  for (int i = 0; i <= p; ++i) {
    if (i > 0) fact *= i;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(p + q),
                 static_cast<unsigned long>(p - i));
    c[i] = mpq_class(i % 2 == 0 ? binom : mpz_class(-binom), fact);
    c[i].canonicalize();
  }
  return c;
}

mpq_class evaluate_polynomial(const std::vector<mpq_class>& coeffs, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace hydrorad::specfun
