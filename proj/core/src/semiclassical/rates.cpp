#include "hydrorad/semiclassical/rates.hpp"

#include <cmath>
#include <string>

#include "hydrorad/errors.hpp"
#include "hydrorad/kepler/fourier.hpp"
#include "hydrorad/kepler/orbit.hpp"

namespace hydrorad {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::quantum: return "quantum";
    case Method::fourier: return "fourier";
    case Method::rescaled: return "rescaled";
  }
  return "?";
}

std::string_view to_string(Multipole m) { return m == Multipole::e1 ? "E1" : "E2"; }

}  // namespace hydrorad

namespace hydrorad::semiclassical {

using specfun::BigReal;

namespace {

void check_e2_delta_l(int delta_l) {
  if (delta_l != -2 && delta_l != 0 && delta_l != 2) {
    throw SelectionRuleError("E2 requires delta_l in {-2, 0, +2}, got " +
                             std::to_string(delta_l));
  }
}

void check_e1_delta_l(int delta_l) {
  if (delta_l != -1 && delta_l != 1) {
    throw SelectionRuleError("E1 requires delta_l in {-1, +1}, got " + std::to_string(delta_l));
  }
}

void check_harmonic(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw DomainError("harmonic index must be > 0, got " + std::to_string(k));
  }
}

int integer_harmonic(double k) { return k == std::floor(k) ? static_cast<int>(k) : 0; }

// Final level of a rescaled channel; throws if it is not a hydrogenic state.
void check_final_state(const Level& initial, int delta_n, int delta_l) {
  const int n = initial.n();
  if (delta_n < 1 || delta_n > n - 1) {
    throw DomainError("rescaled channel: need 1 <= dn <= n-1 (n=" + std::to_string(n) +
                      ", dn=" + std::to_string(delta_n) + ")");
  }
  const int n_final = n - delta_n;
  const int l_final = initial.l() + delta_l;
  if (l_final < 0 || l_final > n_final - 1) {
    throw DomainError("rescaled channel: final state n'=" + std::to_string(n_final) +
                      ", l'=" + std::to_string(l_final) + " is not a hydrogenic level");
  }
}

}  // namespace

double e2_reduced_rate(double k, double eccentricity, int delta_l,
                       const specfun::BesselConfig& cfg) {
  check_e2_delta_l(delta_l);
  check_harmonic(k);
  const auto t = kepler::fourier_triple_extended(k, eccentricity, cfg);
  const double k5 = std::pow(k, 5);
  if (delta_l == 0) {
    const double s = (t.A + t.B).to_double();
    return 0.25 * k5 * s * s;
  }
  // dl = -2 pairs with the m = +2 multipole, i.e. (A - B + 2C).
  const BigReal two_c = t.C * 2.0;
  const double s = (delta_l == -2 ? t.A - t.B + two_c : t.A - t.B - two_c).to_double();
  return 0.375 * k5 * s * s;
}

double e1_reduced_rate(double k, double eccentricity, int delta_l,
                       const specfun::BesselConfig& cfg) {
  check_e1_delta_l(delta_l);
  check_harmonic(k);
  if (!(eccentricity >= 0.0 && eccentricity < 1.0)) {
    throw DomainError("e1 rate: eccentricity must lie in [0, 1), got " +
                      std::to_string(eccentricity));
  }
  if (eccentricity == 0.0) {
    if (k != std::floor(k)) {
      throw DomainError("e1 rate: circular orbit with non-integer harmonic " +
                        std::to_string(k) + " has no finite limit");
    }
    return (k == 1.0 && delta_l == -1) ? 1.0 : 0.0;
  }
  const double x = k * eccentricity;
  const int digits = specfun::bessel_working_digits(x, cfg);
  const BigReal jk = specfun::bessel_j_extended(k, x, digits);
  const BigReal jprime = (specfun::bessel_j_extended(k - 1.0, x, digits) -
                          specfun::bessel_j_extended(k + 1.0, x, digits)) /
                         2.0;
  const BigReal e(eccentricity, digits);
  const BigReal one(1L, digits);
  const BigReal cot = sqrt(one / (e * e) - one);
  const double s = (delta_l == 1 ? jprime - cot * jk : jprime + cot * jk).to_double();
  return k * s * s;
}

double e2_rate_prefactor(int Z, int n, const PhysicalConstants& k) {
  return std::pow(double(Z), 6) * std::pow(k.alpha, 7) * k.electron_frequency /
         (60.0 * std::pow(double(n), 7));
}

double e1_rate_prefactor(int Z, int n, const PhysicalConstants& k) {
  return 2.0 * std::pow(double(Z), 4) * std::pow(k.alpha, 5) * k.electron_frequency /
         (3.0 * std::pow(double(n), 5));
}

ChannelRate e2_rate_fourier(const Level& level, double k, int delta_l,
                            const PhysicalConstants& constants,
                            const specfun::BesselConfig& cfg) {
  const auto orbit = kepler::orbit_from_level(level, constants);
  ChannelRate out{.initial = level};
  out.delta_n = integer_harmonic(k);
  out.harmonic = k;
  out.delta_l = delta_l;
  out.omega = k * orbit.angular_frequency;
  out.rate = e2_rate_prefactor(level.Z(), level.n(), constants) *
             e2_reduced_rate(k, orbit.eccentricity, delta_l, cfg);
  out.method = Method::fourier;
  out.multipole = Multipole::e2;
  return out;
}

ChannelRate e1_rate_fourier(const Level& level, double k, int delta_l,
                            const PhysicalConstants& constants,
                            const specfun::BesselConfig& cfg) {
  const auto orbit = kepler::orbit_from_level(level, constants);
  ChannelRate out{.initial = level};
  out.delta_n = integer_harmonic(k);
  out.harmonic = k;
  out.delta_l = delta_l;
  out.omega = k * orbit.angular_frequency;
  out.rate = e1_rate_prefactor(level.Z(), level.n(), constants) *
             e1_reduced_rate(k, orbit.eccentricity, delta_l, cfg);
  out.method = Method::fourier;
  out.multipole = Multipole::e1;
  return out;
}

double rescaled_index(int n, int delta_n) {
  if (delta_n < 1 || delta_n >= n) {
    throw DomainError("rescaled_index: need 1 <= dn <= n-1 (n=" + std::to_string(n) +
                      ", dn=" + std::to_string(delta_n) + ")");
  }
  const double shrink = 1.0 - double(delta_n) / n;
  return 0.5 * n * (1.0 / (shrink * shrink) - 1.0);
}

double rescaling_weight(int n, int delta_n) {
  if (delta_n < 1 || delta_n >= n) {
    throw DomainError("rescaling_weight: need 1 <= dn <= n-1");
  }
  return std::pow(1.0 - double(delta_n) / n, -3);
}

ChannelRate e2_rate_rescaled(const Level& initial, int delta_n, int delta_l,
                             const PhysicalConstants& constants,
                             const specfun::BesselConfig& cfg) {
  check_e2_delta_l(delta_l);
  check_final_state(initial, delta_n, delta_l);
  const int n = initial.n();
  const double k = rescaled_index(n, delta_n);
  ChannelRate out{.initial = initial};
  out.delta_n = delta_n;
  out.harmonic = k;
  out.delta_l = delta_l;
  out.omega = transition_omega(n, n - delta_n, initial.Z(), constants);
  out.rate = rescaling_weight(n, delta_n) * e2_rate_prefactor(initial.Z(), n, constants) *
             e2_reduced_rate(k, kepler::orbit_eccentricity(n, initial.l()), delta_l, cfg);
  out.method = Method::rescaled;
  out.multipole = Multipole::e2;
  return out;
}

ChannelRate e1_rate_rescaled(const Level& initial, int delta_n, int delta_l,
                             const PhysicalConstants& constants,
                             const specfun::BesselConfig& cfg) {
  check_e1_delta_l(delta_l);
  check_final_state(initial, delta_n, delta_l);
  const int n = initial.n();
  const double k = rescaled_index(n, delta_n);
  ChannelRate out{.initial = initial};
  out.delta_n = delta_n;
  out.harmonic = k;
  out.delta_l = delta_l;
  out.omega = transition_omega(n, n - delta_n, initial.Z(), constants);
  out.rate = rescaling_weight(n, delta_n) * e1_rate_prefactor(initial.Z(), n, constants) *
             e1_reduced_rate(k, kepler::orbit_eccentricity(n, initial.l()), delta_l, cfg);
  out.method = Method::rescaled;
  out.multipole = Multipole::e1;
  out.outside_validity = initial.l() == 0;
  return out;
}

}  // namespace hydrorad::semiclassical
