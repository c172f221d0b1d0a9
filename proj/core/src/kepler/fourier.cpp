#include "hydrorad/kepler/fourier.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hydrorad/errors.hpp"
#include "hydrorad/kepler/orbit.hpp"

namespace hydrorad::kepler {

using specfun::BigReal;

FourierTripleExtended fourier_triple_extended(double k, double eccentricity,
                                              const specfun::BesselConfig& cfg) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("fourier_triple: harmonic index must be > 0, got " + std::to_string(k));
  }
  if (!(eccentricity >= 0.0 && eccentricity < 1.0)) {
    throw DomainError("fourier_triple: eccentricity must lie in [0, 1), got " +
                      std::to_string(eccentricity));
  }
  const double x = k * eccentricity;
  const int digits = specfun::bessel_working_digits(x, cfg);
  auto J = [&](double order) { return specfun::bessel_j_extended(order, x, digits); };
  const BigReal jm2 = J(k - 2.0), jm1 = J(k - 1.0), jp1 = J(k + 1.0), jp2 = J(k + 2.0);

  const BigReal e(eccentricity, digits);
  const BigReal one(1L, digits);
  const BigReal one_minus_e2 = one - e * e;

  return {(jm2 - jp2 - e * (jm1 - jp1) * 2.0) / k, one_minus_e2 * (jp2 - jm2) / k,
          sqrt(one_minus_e2) * (jp2 + jm2 - e * (jp1 + jm1)) / k};
}

FourierTriple fourier_triple(double k, double eccentricity, const specfun::BesselConfig& cfg) {
  const auto t = fourier_triple_extended(k, eccentricity, cfg);
  return {k, t.A.to_double(), t.B.to_double(), t.C.to_double()};
}

double fourier_constant_a0(double eccentricity) {
  return 0.5 * (1.0 + 4.0 * eccentricity * eccentricity);
}

double fourier_constant_b0(double eccentricity) {
  return 0.5 * (1.0 - eccentricity * eccentricity);
}

FourierTriple fourier_oracle(int k, double eccentricity) {
  if (k < 1) throw DomainError("fourier_oracle: k must be a positive integer");
  if (!(eccentricity >= 0.0 && eccentricity < 1.0)) {
    throw DomainError("fourier_oracle: eccentricity must lie in [0, 1)");
  }
  // Unit orbit (a = 1, Omega = 1). With t = E - eps sin E the projections
  // become integrals of entire periodic functions of E, for which the
  // trapezoid rule converges faster than any power of the point count.
  constexpr int kDigits = 80;
  constexpr int kMaxPoints = 1 << 14;
  const BigReal e(eccentricity, kDigits);
  const BigReal one(1L, kDigits);
  const BigReal root = sqrt(one - e * e);
  const BigReal two_pi = BigReal::pi(kDigits) * 2.0;

  BigReal sa(kDigits), sb(kDigits), sc(kDigits);
  auto add_points = [&](int count, int stride, int offset) {
    // E_j = 2 pi (offset + stride j) / (stride count)
    for (int j = 0; j < count; ++j) {
      const BigReal E = two_pi * static_cast<double>(offset + stride * j) / static_cast<double>(stride * count);
      BigReal sE(kDigits), cE(kDigits), sM(kDigits), cM(kDigits);
      sin_cos(E, sE, cE);
      sin_cos((E - e * sE) * static_cast<double>(k), sM, cM);
      const BigReal jac = one - e * cE;
      const BigReal x = cE - e;
      const BigReal y = root * sE;
      sa += x * x * cM * jac;
      sb += y * y * cM * jac;
      sc += x * y * sM * jac;
    }
  };

  int n = 64;
  add_points(n, 1, 0);
  BigReal prev_a = sa * (2.0 / n), prev_b = sb * (2.0 / n), prev_c = sc * (2.0 / n);
  const BigReal tiny(1e-65, kDigits);
  while (true) {
    add_points(n, 2, 1);  // odd points of the doubled grid
    n *= 2;
    BigReal a = sa * (2.0 / n), b = sb * (2.0 / n), c = sc * (2.0 / n);
    const bool settled = abs_less(a - prev_a, tiny) && abs_less(b - prev_b, tiny) && abs_less(c - prev_c, tiny);
    if (settled) return {static_cast<double>(k), a.to_double(), b.to_double(), c.to_double()};
    if (n >= kMaxPoints) throw ConvergenceError("fourier_oracle: trapezoid sums did not settle");
    prev_a = std::move(a);
    prev_b = std::move(b);
    prev_c = std::move(c);
  }
}

}  // namespace hydrorad::kepler
