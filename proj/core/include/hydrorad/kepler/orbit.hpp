#pragma once

#include "hydrorad/constants.hpp"
#include "hydrorad/level.hpp"

namespace hydrorad::kepler {

/// Semiclassically quantized Kepler ellipse of a hydrogenic level.
struct OrbitGeometry {
  double semimajor_axis = 0.0;     // a [m]
  double angular_frequency = 0.0;  // Omega [rad/s]
  double eccentricity = 0.0;       // in [0, 1)
};

/// eps = sqrt(1 - (l + 1/2)^2 / n^2).
double orbit_eccentricity(int n, int l);

/// a = n^2 hbar / (Z alpha m_e c), Omega = Z^2 alpha^2 m_e c^2 / (n^3 hbar).
OrbitGeometry orbit_from_level(const Level& level, const PhysicalConstants& k);

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Solves Kepler's equation M = E - eps sin E by Newton iteration to
/// |dE| < 1e-14. Throws ConvergenceError after 100 iterations and DomainError
/// for eps outside [0, 1).
double eccentric_anomaly(double mean_anomaly, double eccentricity);

/// Position on the ellipse in the orbital (xy) plane at time t, with
/// perihelion on the +x axis at t = 0.
PlanarPoint kepler_position(double eccentricity, double semimajor_axis,
                            double angular_frequency, double t);

}  // namespace hydrorad::kepler
