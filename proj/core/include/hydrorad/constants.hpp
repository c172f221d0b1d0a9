#pragma once

#include <string>
#include <vector>

namespace hydrorad {

/// Physical constants in SI units.
///
/// The four primaries (alpha, m_e c^2, hbar, c) define everything else; the
/// derived members are filled by `from_primaries` and are what rate formulas
/// read. `consistency_deviation` reports how far a (possibly hand-edited)
/// instance has drifted from its own primaries.
struct PhysicalConstants {
  std::string profile;

  double alpha = 0.0;           // fine-structure constant
  double electron_energy = 0.0; // m_e c^2 [J]
  double hbar = 0.0;            // [J s]
  double c = 0.0;               // [m/s]

  double bohr_radius = 0.0;        // a_0 = hbar / (alpha m_e c) [m]
  double coulomb_e2 = 0.0;         // e^2 / (4 pi eps_0) = alpha hbar c [J m]
  double electron_frequency = 0.0; // m_e c^2 / hbar [1/s]

  static PhysicalConstants from_primaries(std::string profile, double alpha,
                                          double electron_energy, double hbar,
                                          double c);

  /// Largest relative mismatch between a derived member and its value
  /// recomputed from the primaries. Also flags non-positive entries with +inf.
  double consistency_deviation() const;
};

/// CODATA 2018 recommended values (the default profile).
const PhysicalConstants& codata2018();
/// CODATA 2014 recommended values.
const PhysicalConstants& codata2014();

/// Looks up a named profile ("codata2018", "codata2014").
/// Throws std::invalid_argument for unknown names.
const PhysicalConstants& constants_profile(const std::string& name);
std::vector<std::string> constants_profile_names();

/// Relative tolerance between derived and primary constants.
inline constexpr double kConstantsConsistencyTolerance = 1e-12;

}  // namespace hydrorad
