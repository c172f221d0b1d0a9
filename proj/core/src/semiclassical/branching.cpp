#include "hydrorad/semiclassical/branching.hpp"

#include <algorithm>

#include "hydrorad/semiclassical/rates.hpp"

namespace hydrorad::semiclassical {

namespace {

constexpr int kE2DeltaL[] = {-2, 0, 2};
constexpr int kE1DeltaL[] = {-1, 1};

bool e2_final_allowed(int n_final, int l, int l_final) {
  if (l_final < 0 || l_final > n_final - 1) return false;
  return !(l == 0 && l_final == 0);
}

void assign_percent(std::vector<BranchingEntry>& entries, double total) {
  for (auto& e : entries) e.branching_percent = total > 0.0 ? 100.0 * e.channel.rate / total : 0.0;
}

}  // namespace

int fourier_harmonic_cap(int n) { return 10 * n * n; }

BranchingTable scl_branching_table(const Level& initial, Denominator denominator,
                                   const PhysicalConstants& constants,
                                   const specfun::BesselConfig& cfg) {
  BranchingTable table;
  const bool with_e1 = denominator == Denominator::e1_and_e2;

  // Fourier harmonics until the geometric tail estimate is negligible.
  double fourier_total = 0.0;
  double previous = -1.0, before_previous = -1.0;
  const int cap = fourier_harmonic_cap(initial.n());
  for (int k = 1; k <= cap; ++k) {
    double term = 0.0;
    for (int dl : kE2DeltaL) {
      auto rate = e2_rate_fourier(initial, k, dl, constants, cfg);
      term += rate.rate;
      table.fourier.push_back({rate, 0.0});
    }
    if (with_e1) {
      for (int dl : kE1DeltaL) term += e1_rate_fourier(initial, k, dl, constants, cfg).rate;
    }
    fourier_total += term;
    table.k_max = k;

    if (term == 0.0 && previous == 0.0 && k > 2) break;
    const bool decreasing = before_previous > previous && previous > term;
    if (decreasing && previous > 0.0) {
      const double ratio = term / previous;
      if (ratio < 1.0 && term * ratio / (1.0 - ratio) < 0.1 * kFourierTailTolerance * fourier_total) {
        break;
      }
    }
    before_previous = previous;
    previous = term;
  }

  double rescaled_total = 0.0;
  for (int dn = 1; dn < initial.n(); ++dn) {
    const int n_final = initial.n() - dn;
    for (int dl : kE2DeltaL) {
      if (!e2_final_allowed(n_final, initial.l(), initial.l() + dl)) continue;
      auto rate = e2_rate_rescaled(initial, dn, dl, constants, cfg);
      rescaled_total += rate.rate;
      table.rescaled.push_back({rate, 0.0});
    }
    if (with_e1) {
      for (int dl : kE1DeltaL) {
        const int l_final = initial.l() + dl;
        if (l_final < 0 || l_final > n_final - 1) continue;
        rescaled_total += e1_rate_rescaled(initial, dn, dl, constants, cfg).rate;
      }
    }
  }

  assign_percent(table.fourier, fourier_total);
  assign_percent(table.rescaled, rescaled_total);
  return table;
}

}  // namespace hydrorad::semiclassical
