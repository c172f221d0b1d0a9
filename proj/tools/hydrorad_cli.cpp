// hydrorad: E2/E1 rates of hydrogenic levels, quantum and semiclassical.
//
// Exit codes: 0 ok, 1 selfcheck failure, 2 bad command line or label,
// 3 unphysical transition or numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hydrorad/constants.hpp"
#include "hydrorad/errors.hpp"
#include "hydrorad/report/datasets.hpp"
#include "hydrorad/report/records.hpp"
#include "hydrorad/report/spectroscopic.hpp"
#include "hydrorad/verify/selfcheck.hpp"

namespace {

using namespace hydrorad;

enum Exit { kOk = 0, kSelfcheckFailed = 1, kParseError = 2, kPhysicsError = 3 };

struct RunConfig {
  std::string constants = "codata2018";
  std::vector<std::string> overrides;
  std::string format = "table";
  std::string out_path;
  std::string denominator = "e2";
  std::optional<int> precision;
};

// --set name=value. Primaries re-derive everything; a derived name is
// written as given, so the set may no longer be self-consistent.
PhysicalConstants resolve_constants(const RunConfig& cfg) {
  PhysicalConstants k = constants_profile(cfg.constants);
  if (cfg.overrides.empty()) return k;
  std::map<std::string, double> primaries{
      {"alpha", k.alpha}, {"electron_energy", k.electron_energy}, {"hbar", k.hbar}, {"c", k.c}};
  std::map<std::string, double> derived;
  for (const auto& item : cfg.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw report::ParseError("--set expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw report::ParseError("--set: bad number in '" + item + "'");
    }
    if (primaries.count(name)) {
      primaries[name] = value;
    } else if (name == "bohr_radius" || name == "coulomb_e2" || name == "electron_frequency") {
      derived[name] = value;
    } else {
      throw report::ParseError("--set: unknown constant '" + name + "'");
    }
  }
  k = PhysicalConstants::from_primaries(cfg.constants + "+overrides", primaries["alpha"],
                                        primaries["electron_energy"], primaries["hbar"], primaries["c"]);
  if (derived.count("bohr_radius")) k.bohr_radius = derived["bohr_radius"];
  if (derived.count("coulomb_e2")) k.coulomb_e2 = derived["coulomb_e2"];
  if (derived.count("electron_frequency")) k.electron_frequency = derived["electron_frequency"];
  return k;
}

specfun::BesselConfig bessel_config(const RunConfig& cfg) {
  specfun::BesselConfig b;
  if (cfg.precision) b.guard_digits = *cfg.precision;
  return b;
}

Level parse_level(const std::string& label, int Z) {
  const auto parsed = report::parse_label(label);
  return Level(Z, parsed.n, parsed.l);
}

// Writes to --out if given, stdout otherwise.
template <class Writer>
void emit(const RunConfig& cfg, Writer&& write) {
  if (cfg.out_path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + cfg.out_path + "' for writing");
  write(file);
}

void emit_records(const RunConfig& cfg, const report::RecordTable& table, const PhysicalConstants& k,
                  const std::string& command) {
  emit(cfg, [&](std::ostream& out) {
    if (cfg.format == "csv") {
      report::write_csv(out, table);
    } else if (cfg.format == "json") {
      report::write_json(out, table, {k.profile, command});
    } else {
      report::write_text(out, table);
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hydrogenic E2 transition rates: quantum and semiclassical"};
  app.require_subcommand(1);
  app.set_version_flag("--version", report::library_version());

  RunConfig cfg;
  app.add_option("--constants", cfg.constants, "Constants profile")
      ->check(CLI::IsMember(constants_profile_names()))
      ->capture_default_str();
  app.add_option("--set", cfg.overrides, "Override a constant, name=value (repeatable)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out_path, "Write output to PATH instead of stdout");
  app.add_option("--precision", cfg.precision, "Guard digits for extended-precision Bessel sums")
      ->check(CLI::Range(10, 2000));

  auto* rate_cmd = app.add_subcommand("rate", "Rate of one E2 transition, e.g. 'rate 3d 1s'");
  std::string label_i, label_f, method = "both";
  int rate_z = 1;
  rate_cmd->add_option("initial", label_i, "Initial level, e.g. 3d")->required();
  rate_cmd->add_option("final", label_f, "Final level, e.g. 1s")->required();
  rate_cmd->add_option("--method", method, "qm, scl or both")
      ->check(CLI::IsMember({"qm", "scl", "both"}))
      ->capture_default_str();
  rate_cmd->add_option("--Z", rate_z, "Nuclear charge")->check(CLI::Range(1, 200))->capture_default_str();

  auto* table_cmd = app.add_subcommand("table1", "Quantum vs semiclassical comparison table");

  auto* branch_cmd = app.add_subcommand("branching", "Branching-ratio spectra of one level");
  int bn = 30, bl = 15, bz = 1;
  branch_cmd->add_option("--n", bn, "Principal number")->capture_default_str();
  branch_cmd->add_option("--l", bl, "Orbital number")->capture_default_str();
  branch_cmd->add_option("--Z", bz, "Nuclear charge")->check(CLI::Range(1, 200))->capture_default_str();
  branch_cmd->add_option("--denominator", cfg.denominator, "e2 or all (E1 + E2)")
      ->check(CLI::IsMember({"e2", "all"}))
      ->capture_default_str();

  auto* self_cmd = app.add_subcommand("selfcheck", "Run the oracle suites");

  for (auto* sub : {rate_cmd, table_cmd, branch_cmd, self_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    const PhysicalConstants k = resolve_constants(cfg);
    const auto bessel = bessel_config(cfg);

    if (*rate_cmd) {
      const Level initial = parse_level(label_i, rate_z);
      const Level final_state = parse_level(label_f, rate_z);
      const auto m = method == "qm" ? report::RateMethod::qm
                     : method == "scl" ? report::RateMethod::scl
                                       : report::RateMethod::both;
      const auto rates = report::transition_rates(initial, final_state, m, k, bessel);
      emit_records(cfg, report::rate_records(rates, final_state), k, "rate");
    } else if (*table_cmd) {
      const auto rows = report::table1_rows(k, bessel);
      if (cfg.format == "table") {
        emit(cfg, [&](std::ostream& out) { out << report::table1_text(rows); });
      } else {
        emit_records(cfg, report::table1_records(rows), k, "table1");
      }
    } else if (*branch_cmd) {
      const Level initial(bz, bn, bl);
      const auto denom = cfg.denominator == "all" ? Denominator::e1_and_e2 : Denominator::e2_only;
      const auto points = report::branching_dataset(initial, denom, k, bessel);
      emit_records(cfg, report::branching_records(points), k, "branching");
    } else if (*self_cmd) {
      const auto results = verify::run_selfcheck(k, bessel);
      bool ok = true;
      emit(cfg, [&](std::ostream& out) {
        for (const auto& r : results) {
          char line[256];
          std::snprintf(line, sizeof line, "%s  %-44s max_dev=%.3e tol=%.1e cases=%ld time=%.2fs\n",
                        r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.max_deviation, r.tolerance,
                        r.cases, r.seconds);
          out << line;
          ok = ok && r.passed();
        }
      });
      return ok ? kOk : kSelfcheckFailed;
    }
  } catch (const report::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    // DomainError, SelectionRuleError, PrecisionOverflow, ConvergenceError
    std::cerr << "error: " << e.what() << '\n';
    return kPhysicsError;
  }
  return kOk;
}
