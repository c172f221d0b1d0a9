#pragma once

#include <string>
#include <vector>

#include "hydrorad/constants.hpp"
#include "hydrorad/level.hpp"
#include "hydrorad/report/records.hpp"
#include "hydrorad/semiclassical/channel_rate.hpp"
#include "hydrorad/specfun/bessel.hpp"

namespace hydrorad::report {

struct Transition {
  int n = 0;
  int l = 0;
  int n_final = 0;
  int l_final = 0;
  int delta_l() const { return l_final - l; }
};

/// The 24 hydrogen E2 transitions of the comparison table, grouped
/// dl = -2, 0, +2 (eight each, left column then right column).
const std::vector<Transition>& table1_transitions();

struct Table1Row {
  Transition transition;
  double rate_qm = 0.0;
  double rate_scl = 0.0;
};

std::vector<Table1Row> table1_rows(const PhysicalConstants& k = codata2018(),
                                   const specfun::BesselConfig& cfg = {});

/// Columns label_i, label_f, delta_l, rate_qm, rate_scl.
RecordTable table1_records(const std::vector<Table1Row>& rows);

/// Plain-text rendering in the two-column layout of the published table.
std::string table1_text(const std::vector<Table1Row>& rows);

enum class RateMethod { qm, scl, both };

/// Throws SelectionRuleError when E2 forbids the transition and DomainError
/// for non-emitting or non-hydrogenic pairs.
std::vector<ChannelRate> transition_rates(const Level& initial, const Level& final_state,
                                          RateMethod method,
                                          const PhysicalConstants& k = codata2018(),
                                          const specfun::BesselConfig& cfg = {});

/// Columns label_i, label_f, delta_l, method, omega_rad_s, f_thz, rate_per_s.
RecordTable rate_records(const std::vector<ChannelRate>& rates, const Level& final_state);

/// One point of a branching dataset.
struct BranchingPoint {
  std::string panel;   // total, dl-2, dl0, dl+2
  std::string series;  // quantum, fourier, rescaled
  int dn_or_k = 0;
  int delta_l = 0;     // meaningless (0) in the total panel
  double f_thz = 0.0;
  double rate = 0.0;
  double branching_percent = 0.0;
};

/// Four panels: total (summed over dl at each dn or k) and one per dl, each
/// with quantum, fourier and rescaled series. Quantum percentages are always
/// relative to the total quantum E2 rate.
std::vector<BranchingPoint> branching_dataset(const Level& initial,
                                              Denominator denominator = Denominator::e2_only,
                                              const PhysicalConstants& k = codata2018(),
                                              const specfun::BesselConfig& cfg = {});

/// Columns panel, series, dn_or_k, delta_l, f_thz, rate_per_s, branching_percent
/// (delta_l is "all" in the total panel).
RecordTable branching_records(const std::vector<BranchingPoint>& points);

}  // namespace hydrorad::report
