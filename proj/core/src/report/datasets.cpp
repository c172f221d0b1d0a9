#include "hydrorad/report/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "hydrorad/errors.hpp"
#include "hydrorad/quantum/angular.hpp"
#include "hydrorad/quantum/rates.hpp"
#include "hydrorad/report/format.hpp"
#include "hydrorad/report/spectroscopic.hpp"
#include "hydrorad/semiclassical/branching.hpp"
#include "hydrorad/semiclassical/rates.hpp"

namespace hydrorad::report {

namespace {

double to_thz(double omega) { return omega / (2.0 * std::numbers::pi) * 1e-12; }

std::string delta_l_text(int dl) { return dl > 0 ? "+" + std::to_string(dl) : std::to_string(dl); }

std::string panel_name(int dl) { return "dl" + delta_l_text(dl); }

}  // namespace

const std::vector<Transition>& table1_transitions() {
  static const std::vector<Transition> rows = {
      // dl = -2
      {3, 2, 1, 0}, {4, 2, 1, 0}, {5, 2, 1, 0}, {6, 2, 1, 0},
      {4, 3, 2, 1}, {4, 3, 3, 1}, {5, 4, 3, 2}, {5, 4, 4, 2},
      // dl = 0
      {3, 1, 2, 1}, {4, 1, 2, 1}, {5, 1, 2, 1}, {6, 1, 2, 1},
      {4, 2, 3, 2}, {5, 2, 3, 2}, {5, 3, 4, 3}, {6, 3, 5, 3},
      // dl = +2
      {5, 1, 4, 3}, {6, 1, 4, 3}, {7, 1, 4, 3}, {8, 1, 4, 3},
      {6, 2, 5, 4}, {7, 3, 6, 5}, {8, 4, 7, 6}, {9, 5, 8, 7},
  };
  return rows;
}

std::vector<Table1Row> table1_rows(const PhysicalConstants& k, const specfun::BesselConfig& cfg) {
  std::vector<Table1Row> out;
  for (const auto& t : table1_transitions()) {
    const Level initial(1, t.n, t.l);
    const Level final_state(1, t.n_final, t.l_final);
    Table1Row row{t, 0.0, 0.0};
    row.rate_qm = quantum::qm_rate(initial, final_state, k).rate;
    row.rate_scl = semiclassical::e2_rate_rescaled(initial, t.n - t.n_final, t.delta_l(), k, cfg).rate;
    out.push_back(row);
  }
  return out;
}

RecordTable table1_records(const std::vector<Table1Row>& rows) {
  RecordTable table{{"label_i", "label_f", "delta_l", "rate_qm", "rate_scl"}, {}};
  for (const auto& r : rows) {
    const auto& t = r.transition;
    table.rows.push_back({format_label(t.n, t.l), format_label(t.n_final, t.l_final),
                          static_cast<long>(t.delta_l()), r.rate_qm, r.rate_scl});
  }
  return table;
}

std::string table1_text(const std::vector<Table1Row>& rows) {
  auto cell = [](const Table1Row& r, bool compact) {
    const auto& t = r.transition;
    const auto fmt = compact ? format_compact_value : format_table_value;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-14s %9s %9s",
                  (format_label(t.n, t.l) + " -> " + format_label(t.n_final, t.l_final)).c_str(),
                  fmt(r.rate_qm).c_str(), fmt(r.rate_scl).c_str());
    return std::string(buf);
  };
  const std::string rule(71, '-');
  std::ostringstream out;
  char head[96];
  std::snprintf(head, sizeof head, "%-14s %9s %9s", "(n,l)->(n',l')", "QM", "SCL");
  out << head << "  |  " << head << '\n' << rule << '\n';
  // Eight rows per dl group: the first four go in the left column. The
  // bottom-right block is all small numbers and is printed as x.y(-i).
  for (std::size_t g = 0; g + 8 <= rows.size(); g += 8) {
    const bool last = g + 8 == rows.size();
    for (std::size_t i = 0; i < 4; ++i) {
      out << cell(rows[g + i], false) << "  |  " << cell(rows[g + i + 4], last) << '\n';
    }
    out << rule << '\n';
  }
  return out.str();
}

std::vector<ChannelRate> transition_rates(const Level& initial, const Level& final_state,
                                          RateMethod method, const PhysicalConstants& k,
                                          const specfun::BesselConfig& cfg) {
  if (initial.Z() != final_state.Z()) throw DomainError("initial and final levels have different Z");
  if (final_state.n() >= initial.n()) {
    throw DomainError("no spontaneous E2 decay unless n' < n (got n = " + std::to_string(initial.n()) +
                      ", n' = " + std::to_string(final_state.n()) + ")");
  }
  const int dl = final_state.l() - initial.l();
  if (!quantum::e2_allowed(initial.l(), final_state.l())) {
    if (initial.l() == 0 && final_state.l() == 0) {
      throw SelectionRuleError("E2 selection rule violated: l = 0 -> l' = 0 is forbidden");
    }
    throw SelectionRuleError("E2 selection rule violated: delta l = " + delta_l_text(dl) +
                             " (allowed: 0, +-2)");
  }
  std::vector<ChannelRate> out;
  if (method != RateMethod::scl) out.push_back(quantum::qm_rate(initial, final_state, k));
  if (method != RateMethod::qm) {
    out.push_back(semiclassical::e2_rate_rescaled(initial, initial.n() - final_state.n(), dl, k, cfg));
  }
  return out;
}

RecordTable rate_records(const std::vector<ChannelRate>& rates, const Level& final_state) {
  RecordTable table{{"label_i", "label_f", "delta_l", "method", "omega_rad_s", "f_thz", "rate_per_s"}, {}};
  for (const auto& r : rates) {
    table.rows.push_back({format_label(r.initial.n(), r.initial.l()),
                          format_label(final_state.n(), final_state.l()), static_cast<long>(r.delta_l),
                          std::string(r.method == Method::quantum ? "qm" : "scl"), r.omega,
                          to_thz(r.omega), r.rate});
  }
  return table;
}

std::vector<BranchingPoint> branching_dataset(const Level& initial, Denominator denominator,
                                              const PhysicalConstants& k,
                                              const specfun::BesselConfig& cfg) {
  const auto quantum_entries = quantum::qm_branching_table(initial, k);
  const auto scl = semiclassical::scl_branching_table(initial, denominator, k, cfg);

  struct Series {
    const char* name;
    const std::vector<BranchingEntry>* entries;
  };
  const Series series[] = {{"quantum", &quantum_entries}, {"fourier", &scl.fourier}, {"rescaled", &scl.rescaled}};

  std::vector<BranchingPoint> out;
  for (const auto& s : series) {
    // Entries are sorted by dn (or k) then dl, so the map keeps that order.
    std::map<int, BranchingPoint> totals;
    for (const auto& e : *s.entries) {
      auto& t = totals[e.channel.delta_n];
      t.panel = "total";
      t.series = s.name;
      t.dn_or_k = e.channel.delta_n;
      t.f_thz = to_thz(e.channel.omega);
      t.rate += e.channel.rate;
      t.branching_percent += e.branching_percent;
    }
    for (auto& [dn, p] : totals) out.push_back(p);
  }
  for (int dl : {-2, 0, 2}) {
    for (const auto& s : series) {
      for (const auto& e : *s.entries) {
        if (e.channel.delta_l != dl) continue;
        out.push_back({panel_name(dl), s.name, e.channel.delta_n, dl, to_thz(e.channel.omega),
                       e.channel.rate, e.branching_percent});
      }
    }
  }
  return out;
}

RecordTable branching_records(const std::vector<BranchingPoint>& points) {
  RecordTable table{{"panel", "series", "dn_or_k", "delta_l", "f_thz", "rate_per_s", "branching_percent"}, {}};
  for (const auto& p : points) {
    table.rows.push_back({p.panel, p.series, static_cast<long>(p.dn_or_k),
                          p.panel == "total" ? Field(std::string("all")) : Field(static_cast<long>(p.delta_l)),
                          p.f_thz, p.rate, p.branching_percent});
  }
  return table;
}

}  // namespace hydrorad::report
