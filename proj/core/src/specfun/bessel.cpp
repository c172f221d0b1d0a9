#include "hydrorad/specfun/bessel.hpp"

#include <cmath>
#include <string>

#include "hydrorad/errors.hpp"

namespace hydrorad::specfun {

namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

bool is_integer(double v) { return v == std::floor(v); }

// RAII scratch value at a fixed binary precision.
struct Scratch {
  explicit Scratch(long bits) { mpfr_init2(v, bits); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_t v;
};

// Ascending series sum_m (-1)^m (x/2)^(2m+nu) / (m! Gamma(m+nu+1)), x > 0,
// nu not a negative integer.
BigReal ascending_series(double nu, double x, int digits) {
  const long bits = digits_to_bits(digits);
  Scratch h(bits), h2(bits), term(bits), denom(bits), order(bits);
  BigReal sum(digits);

  mpfr_set_d(h.v, x, kRound);
  mpfr_div_2ui(h.v, h.v, 1, kRound);
  mpfr_sqr(h2.v, h.v, kRound);
  mpfr_set_d(order.v, nu, kRound);

  // Leading term (x/2)^nu / Gamma(nu + 1).
  mpfr_pow(term.v, h.v, order.v, kRound);
  mpfr_add_ui(denom.v, order.v, 1, kRound);
  mpfr_gamma(denom.v, denom.v, kRound);
  mpfr_div(term.v, term.v, denom.v, kRound);
  mpfr_set(sum.get_mutable(), term.v, kRound);

  const double h2_estimate = 0.25 * x * x;
  const long max_terms = 10 * static_cast<long>(0.5 * x + digits) + 1000;
  for (long m = 0; m < max_terms; ++m) {
    const auto next = static_cast<unsigned long>(m + 1);
    mpfr_mul(term.v, term.v, h2.v, kRound);
    mpfr_div_ui(term.v, term.v, next, kRound);
    mpfr_add_ui(denom.v, order.v, next, kRound);
    mpfr_div(term.v, term.v, denom.v, kRound);
    mpfr_neg(term.v, term.v, kRound);
    mpfr_add(sum.get_mutable(), sum.get_mutable(), term.v, kRound);

    if (mpfr_zero_p(term.v)) return sum;
    // Past the largest term the magnitudes decrease monotonically; stop once
    // the current term no longer affects the working precision.
    const double shifted = static_cast<double>(m + 1) + nu;
    const bool decreasing = shifted > 0.0 && (m + 2.0) * (shifted + 1.0) > h2_estimate;
    if (decreasing && !mpfr_zero_p(sum.get()) &&
        mpfr_get_exp(term.v) < mpfr_get_exp(sum.get()) - bits) {
      return sum;
    }
  }
  throw ConvergenceError("bessel series did not converge (nu=" + std::to_string(nu) +
                         ", x=" + std::to_string(x) + ")");
}

void check_arguments(const char* op, double nu, double x) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw DomainError(std::string(op) + ": order must be >= 0, got " + std::to_string(nu));
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(op) + ": argument must be >= 0, got " + std::to_string(x));
  }
  if (x > kBesselMaxArgument) {
    throw DomainError(std::string(op) + ": argument " + std::to_string(x) +
                      " exceeds the supported range");
  }
}

}  // namespace

int bessel_working_digits(double x, const BesselConfig& cfg) {
  const double wanted = std::ceil(0.8 * x) + cfg.guard_digits;
  if (wanted > cfg.max_digits) {
    throw PrecisionOverflow("bessel: " + std::to_string(static_cast<long>(wanted)) +
                            " digits needed at x=" + std::to_string(x) + ", cap is " +
                            std::to_string(cfg.max_digits));
  }
  return std::max(static_cast<int>(wanted), kMinDigits);
}

BigReal bessel_j_extended(double nu, double x, int digits) {
  if (!(x >= 0.0) || !std::isfinite(x) || !std::isfinite(nu)) {
    throw DomainError("bessel_j: argument must be finite and >= 0");
  }
  if (nu < 0.0 && is_integer(nu)) {
    BigReal positive = bessel_j_extended(-nu, x, digits);
    return std::fmod(-nu, 2.0) == 0.0 ? positive : -positive;
  }
  if (x == 0.0) {
    if (nu == 0.0) return BigReal(1L, digits);
    if (nu > 0.0) return BigReal(digits);
    throw DomainError("bessel_j: J_nu(0) is singular for negative non-integer order " +
                      std::to_string(nu));
  }
  return ascending_series(nu, x, digits);
}

double bessel_j(double nu, double x, const BesselConfig& cfg) {
  check_arguments("bessel_j", nu, x);
  return bessel_j_extended(nu, x, bessel_working_digits(x, cfg)).to_double();
}

double bessel_j_prime(double nu, double x, const BesselConfig& cfg) {
  check_arguments("bessel_j_prime", nu, x);
  if (x == 0.0) {
    if (nu == 1.0) return 0.5;
    if (nu == 0.0 || nu > 1.0) return 0.0;
    throw DomainError("bessel_j_prime: derivative diverges at x=0 for 0 < nu < 1");
  }
  const int digits = bessel_working_digits(x, cfg);
  BigReal d = bessel_j_extended(nu - 1.0, x, digits) - bessel_j_extended(nu + 1.0, x, digits);
  return (d / 2.0).to_double();
}

}  // namespace hydrorad::specfun
