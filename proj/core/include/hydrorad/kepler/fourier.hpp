#pragma once

#include "hydrorad/specfun/bessel.hpp"

namespace hydrorad::kepler {

/// Fourier coefficients of the orbit's second moments at harmonic k:
///   x^2 = a^2 sum_k A_k cos(k Omega t),  y^2 = a^2 sum_k B_k cos(k Omega t),
///   x y = a^2 sum_k C_k sin(k Omega t).
struct FourierTriple {
  double k = 0.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

/// Closed Bessel forms for A_k, B_k, C_k at real order k > 0, 0 <= eps < 1.
/// Non-integer k uses Bessel functions of real order. The combinations are
/// formed in extended precision before rounding.
FourierTriple fourier_triple(double k, double eccentricity,
                             const specfun::BesselConfig& cfg = {});

/// fourier_triple before rounding, at the working precision of the Bessel
/// series (for callers that combine the coefficients further).
struct FourierTripleExtended {
  specfun::BigReal A;
  specfun::BigReal B;
  specfun::BigReal C;
};
FourierTripleExtended fourier_triple_extended(double k, double eccentricity,
                                              const specfun::BesselConfig& cfg = {});

/// Constant (k = 0) terms of the x^2 and y^2 series. They carry no radiation
/// and no rate formula uses them.
double fourier_constant_a0(double eccentricity);
double fourier_constant_b0(double eccentricity);

/// Independent check of fourier_triple: projects x^2, y^2 and x y onto the
/// k-th harmonic of the orbit by direct numerical integration over one
/// period (no Bessel functions), carried in 80-digit arithmetic so tiny
/// high-harmonic coefficients keep full relative accuracy.
/// Throws ConvergenceError if the sums do not settle.
FourierTriple fourier_oracle(int k, double eccentricity);

}  // namespace hydrorad::kepler
