#pragma once

#include <vector>

#include "hydrorad/constants.hpp"
#include "hydrorad/level.hpp"
#include "hydrorad/semiclassical/channel_rate.hpp"
#include "hydrorad/specfun/bessel.hpp"

namespace hydrorad::semiclassical {

/// Relative size of the omitted Fourier tail at which the harmonic sum stops.
inline constexpr double kFourierTailTolerance = 1e-12;

struct BranchingTable {
  /// Harmonics k = 1..k_max, each with dl = -2, 0, +2 (sorted by k, then dl).
  std::vector<BranchingEntry> fourier;
  /// Every E2-allowed (dn, dl) with a hydrogenic final state (sorted by dn, then dl).
  std::vector<BranchingEntry> rescaled;
  int k_max = 0;
};

/// Largest harmonic the Fourier branching table will reach for level n.
int fourier_harmonic_cap(int n);

/// Fourier and rescaled E2 spectra of `initial` with branching fractions in
/// percent of their own method class. With Denominator::e1_and_e2 the class
/// total also includes the E1 rates of the same method.
BranchingTable scl_branching_table(const Level& initial,
                                   Denominator denominator = Denominator::e2_only,
                                   const PhysicalConstants& constants = codata2018(),
                                   const specfun::BesselConfig& cfg = {});

}  // namespace hydrorad::semiclassical
