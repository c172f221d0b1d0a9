#pragma once

#include "hydrorad/specfun/big_real.hpp"

namespace hydrorad::specfun {

/// Working-precision schedule for the ascending Bessel series.
///
/// The series for J_nu(x) alternates with a largest term of order e^x, so the
/// working precision is ceil(0.8 x) + guard_digits decimal digits.
struct BesselConfig {
  int guard_digits = 40;
  int max_digits = 5000;
};

inline constexpr double kBesselMaxArgument = 1e5;

/// Decimal digits the series needs at argument x.
/// Throws PrecisionOverflow past cfg.max_digits.
int bessel_working_digits(double x, const BesselConfig& cfg = {});

/// J_nu(x) for real nu >= 0 and 0 <= x <= 1e5, relative error <= 1e-12.
/// Throws DomainError for negative arguments.
double bessel_j(double nu, double x, const BesselConfig& cfg = {});

/// J_nu'(x) = (J_{nu-1}(x) - J_{nu+1}(x)) / 2 for nu >= 0, x >= 0.
/// At x = 0 the finite limit is returned (1/2 for nu = 1, 0 for nu = 0 or
/// nu > 1); for 0 < nu < 1 the derivative diverges and DomainError is thrown.
double bessel_j_prime(double nu, double x, const BesselConfig& cfg = {});

/// J_nu(x) for any real order, summed at `digits` decimal digits and returned
/// unrounded. Negative integer orders use J_{-n} = (-1)^n J_n. At x = 0 a
/// negative non-integer order is singular and throws DomainError.
BigReal bessel_j_extended(double nu, double x, int digits);

}  // namespace hydrorad::specfun
