#include "hydrorad/kepler/orbit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hydrorad/errors.hpp"

namespace hydrorad::kepler {

double orbit_eccentricity(int n, int l) {
  const double ratio = (l + 0.5) / n;
  return std::sqrt(1.0 - ratio * ratio);
}

OrbitGeometry orbit_from_level(const Level& level, const PhysicalConstants& k) {
  const double n = level.n();
  const double Z = level.Z();
  OrbitGeometry g;
  g.semimajor_axis = n * n * k.hbar * k.c / (Z * k.alpha * k.electron_energy);
  g.angular_frequency = Z * Z * k.alpha * k.alpha * k.electron_frequency / (n * n * n);
  g.eccentricity = orbit_eccentricity(level.n(), level.l());
  return g;
}

double eccentric_anomaly(double mean_anomaly, double eccentricity) {
  if (!(eccentricity >= 0.0 && eccentricity < 1.0)) {
    throw DomainError("eccentric_anomaly: eccentricity must lie in [0, 1), got " +
                      std::to_string(eccentricity));
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // Reduce to [-pi, pi] and restore the whole turns afterwards.
  const double turns = std::round(mean_anomaly / two_pi);
  const double M = mean_anomaly - turns * two_pi;

  double E = M + 0.85 * eccentricity * (M >= 0.0 ? 1.0 : -1.0);
  for (int iter = 0; iter < 100; ++iter) {
    const double f = E - eccentricity * std::sin(E) - M;
    const double step = f / (1.0 - eccentricity * std::cos(E));
    E -= step;
    if (std::abs(step) < 1e-14) return E + turns * two_pi;
  }
  throw ConvergenceError("eccentric_anomaly: Newton iteration did not converge (M=" +
                         std::to_string(mean_anomaly) + ", eps=" +
                         std::to_string(eccentricity) + ")");
}

PlanarPoint kepler_position(double eccentricity, double semimajor_axis,
                            double angular_frequency, double t) {
  const double E = eccentric_anomaly(angular_frequency * t, eccentricity);
  return {semimajor_axis * (std::cos(E) - eccentricity),
          semimajor_axis * std::sqrt(1.0 - eccentricity * eccentricity) * std::sin(E)};
}

}  // namespace hydrorad::kepler
