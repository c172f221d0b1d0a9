#include "hydrorad/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace hydrorad {

PhysicalConstants PhysicalConstants::from_primaries(std::string profile, double alpha,
                                                    double electron_energy, double hbar,
                                                    double c) {
  PhysicalConstants k;
  k.profile = std::move(profile);
  k.alpha = alpha;
  k.electron_energy = electron_energy;
  k.hbar = hbar;
  k.c = c;
  k.bohr_radius = hbar * c / (alpha * electron_energy);
  k.coulomb_e2 = alpha * hbar * c;
  k.electron_frequency = electron_energy / hbar;
  return k;
}

double PhysicalConstants::consistency_deviation() const {
  for (double v : {alpha, electron_energy, hbar, c, bohr_radius, coulomb_e2,
                   electron_frequency}) {
    if (!(v > 0.0) || !std::isfinite(v)) return std::numeric_limits<double>::infinity();
  }
  const auto ref = from_primaries(profile, alpha, electron_energy, hbar, c);
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  return std::max({rel(bohr_radius, ref.bohr_radius), rel(coulomb_e2, ref.coulomb_e2),
                   rel(electron_frequency, ref.electron_frequency)});
}

const PhysicalConstants& codata2018() {
  static const PhysicalConstants k = PhysicalConstants::from_primaries(
      "codata2018", 7.2973525693e-3, 8.1871057769e-14, 1.054571817e-34, 299792458.0);
  return k;
}

const PhysicalConstants& codata2014() {
  static const PhysicalConstants k = PhysicalConstants::from_primaries(
      "codata2014", 7.2973525664e-3, 8.18710565e-14, 1.054571800e-34, 299792458.0);
  return k;
}

const PhysicalConstants& constants_profile(const std::string& name) {
  if (name == "codata2018") return codata2018();
  if (name == "codata2014") return codata2014();
  throw std::invalid_argument("unknown constants profile '" + name + "'");
}

std::vector<std::string> constants_profile_names() { return {"codata2018", "codata2014"}; }

}  // namespace hydrorad
