#include "hydrorad/quantum/radial.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hydrorad/errors.hpp"
#include "hydrorad/specfun/big_real.hpp"
#include "hydrorad/specfun/laguerre.hpp"

namespace hydrorad::quantum {

using specfun::BigReal;
using specfun::Surd;

namespace {

void check_state(int n, int l) {
  if (n < 1 || l < 0 || l >= n) {
    throw DomainError("radial: invalid state n=" + std::to_string(n) + ", l=" + std::to_string(l));
  }
  if (n > kMaxPrincipal) {
    throw PrecisionOverflow("radial: n=" + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxPrincipal));
  }
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpq_class power(const mpq_class& base, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// integral_0^inf r^power R_{n l} R_{n' l'} dr at Z = 1.
Surd exact_radial_moment(int power_of_r, int n, int l, int n2, int l2) {
  const auto c1 = specfun::assoc_laguerre_coeffs(n - l - 1, 2 * l + 1);
  const auto c2 = specfun::assoc_laguerre_coeffs(n2 - l2 - 1, 2 * l2 + 1);
  const mpq_class scale1(2, n), scale2(2, n2);
  // 1 / beta with beta = 1/n + 1/n'.
  mpq_class inverse_beta(n * n2, n + n2);
  inverse_beta.canonicalize();

  std::vector<mpq_class> p1(c1.size()), p2(c2.size());
  for (std::size_t i = 0; i < c1.size(); ++i) p1[i] = c1[i] * power(scale1, l + i);
  for (std::size_t j = 0; j < c2.size(); ++j) p2[j] = c2[j] * power(scale2, l2 + j);

  // Gamma(s + 1) / beta^(s + 1) for s = power + l + l' + i + j.
  const std::size_t s0 = static_cast<std::size_t>(power_of_r + l + l2);
  const std::size_t span = c1.size() + c2.size() - 1;
  std::vector<mpq_class> gamma_terms(span);
  for (std::size_t t = 0; t < span; ++t) {
    gamma_terms[t] = mpq_class(factorial(s0 + t)) * power(inverse_beta, s0 + t + 1);
  }

  mpq_class sum = 0;
  for (std::size_t i = 0; i < p1.size(); ++i) {
    mpq_class inner = 0;
    for (std::size_t j = 0; j < p2.size(); ++j) inner += p2[j] * gamma_terms[i + j];
    sum += p1[i] * inner;
  }
  if (sum == 0) return Surd{};
  const Surd norm{mpq_class(1), radial_normalization_squared(n, l) *
                                    radial_normalization_squared(n2, l2)};
  return Surd::rational(sum) * norm;
}

struct RadialCache {
  std::mutex mutex;
  std::map<std::tuple<int, int, int, int>, Surd> entries;
};

RadialCache& cache() {
  static RadialCache instance;
  return instance;
}

std::atomic<bool> g_cache_enabled{true};

Surd radial_integral_z1(int n, int l, int n2, int l2) {
  // The integrand is symmetric in the two states.
  auto key = std::make_tuple(n, l, n2, l2);
  if (std::tie(n2, l2) < std::tie(n, l)) key = std::make_tuple(n2, l2, n, l);
  if (!g_cache_enabled.load()) return exact_radial_moment(4, n, l, n2, l2);

  auto& c = cache();
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.entries.find(key); it != c.entries.end()) return it->second;
  }
  Surd value = exact_radial_moment(4, std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                   std::get<3>(key));
  std::lock_guard lock(c.mutex);
  return c.entries.emplace(key, std::move(value)).first->second;
}

}  // namespace

mpq_class radial_normalization_squared(int n, int l) {
  check_state(n, l);
  mpq_class out(factorial(static_cast<unsigned long>(n - l - 1)) * 8,
                factorial(static_cast<unsigned long>(n + l)) * 2 * n * n * n * n);
  out.canonicalize();
  return out;
}

double radial_wavefunction(int n, int l, int Z, double r_bohr) {
  check_state(n, l);
  if (Z < 1) throw DomainError("radial_wavefunction: Z must be positive");
  if (!(r_bohr >= 0.0)) throw DomainError("radial_wavefunction: r must be >= 0");

  const auto coeffs = specfun::assoc_laguerre_coeffs(n - l - 1, 2 * l + 1);
  const double rho = 2.0 * Z * r_bohr / n;
  // Digits to absorb cancellation among the polynomial terms.
  double largest = 0.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double c = std::abs(coeffs[i].get_d());
    if (c > 0.0) largest = std::max(largest, std::log10(c) + i * std::log10(std::max(rho, 1e-300)));
  }
  const int digits = 40 + static_cast<int>(std::ceil(std::max(largest, 0.0)));

  const BigReal x(rho, digits);
  BigReal poly(digits);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    poly = poly * x + BigReal(*it, digits);
  }
  BigReal value = sqrt(BigReal(radial_normalization_squared(n, l), digits)) * poly *
                  exp(BigReal(-0.5 * rho, digits));
  if (l > 0) value = value * pow(x, BigReal(static_cast<long>(l), digits));
  value = value * std::pow(double(Z), 1.5);
  return value.to_double();
}

RadialIntegral radial_integral(int n, int l, int n_final, int l_final, int Z) {
  check_state(n, l);
  check_state(n_final, l_final);
  if (Z < 1) throw DomainError("radial_integral: Z must be positive");
  Surd value = radial_integral_z1(n, l, n_final, l_final);
  if (Z != 1) value.coefficient /= mpq_class(Z * Z);
  return {value};
}

void set_radial_cache_enabled(bool enabled) { g_cache_enabled.store(enabled); }
bool radial_cache_enabled() { return g_cache_enabled.load(); }

void clear_radial_cache() {
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  c.entries.clear();
}

}  // namespace hydrorad::quantum
