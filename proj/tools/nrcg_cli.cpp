// Copyright 2026 The nrcg-engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nrcg: parameter scans and per-iteration reports for the NRCG heat engine.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nrcg/config.hpp"
#include "nrcg/errors.hpp"
#include "nrcg/report.hpp"
#include "nrcg/sweeps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Flags {
  std::optional<int> case_id;
  std::optional<int> qubits;
  std::optional<int> root;
  std::optional<long long> iterations;
  std::optional<std::string> kt;
  std::optional<std::string> theta;
  std::optional<std::string> phi;
  std::optional<long long> grid_theta;
  std::optional<long long> grid_phi;
  bool correlations = false;
  std::optional<long long> jobs;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<std::string> config;
  std::optional<std::string> gate_sequence;
  bool allow_custom = false;
  std::optional<std::string> qubit_b;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--case", f.case_id, "Circuit case (1 or 2)");
  sub->add_option("--qubits", f.qubits, "System size (2 or 3)");
  sub->add_option("--root", f.root, "Root order N of the gates");
  sub->add_option("--iterations", f.iterations, "Protocol iterations M");
  sub->add_option("--kt", f.kt, "Temperature of qubits A and C; comma list for temp-scan");
  sub->add_option("--theta", f.theta, "Qubit-B polar angle, e.g. 0.83pi");
  sub->add_option("--phi", f.phi, "Qubit-B phase, e.g. 0.32pi");
  sub->add_option("--grid-theta", f.grid_theta, "Theta grid points on [0, pi]");
  sub->add_option("--grid-phi", f.grid_phi, "Phi grid points on [0, 2pi]");
  sub->add_flag("--correlations", f.correlations, "Add MI, discord, CC and EOF columns");
  sub->add_option("--jobs", f.jobs, "Worker threads (0 = all cores)");
  sub->add_option("--out", f.out, "Output path (default stdout)");
  sub->add_option("--format", f.format, "csv or json");
  sub->add_option("--config", f.config, "JSON config file");
  sub->add_option("--gate-sequence", f.gate_sequence, "Per-iteration gates, e.g. \"A>B,B>A\"");
  sub->add_flag("--allow-custom", f.allow_custom, "Accept gate sequences that break the case rules");
  sub->add_option("--qubit-b", f.qubit_b, "Qubit-B initialization: pure, dephased or gibbs");
}

long long at_least(long long v, long long lo, const char* name) {
  if (v < lo) throw nrcg::ConfigError(std::string(name) + " must be >= " + std::to_string(lo));
  return v;
}

nrcg::SweepConfig resolve(const Flags& f) {
  nrcg::SweepConfig cfg;
  if (f.config) nrcg::apply_config_file(*f.config, cfg);
  if (f.case_id) {
    if (*f.case_id != 1 && *f.case_id != 2) throw nrcg::ConfigError("--case must be 1 or 2");
    cfg.protocol.case_id = static_cast<nrcg::CaseId>(*f.case_id);
  }
  if (f.qubits) cfg.protocol.n_qubits = static_cast<std::size_t>(at_least(*f.qubits, 0, "--qubits"));
  if (f.root) cfg.protocol.n_root = static_cast<int>(at_least(*f.root, 1, "--root"));
  if (f.iterations) cfg.iterations = static_cast<std::size_t>(at_least(*f.iterations, 0, "--iterations"));
  if (f.kt) cfg.kt_grid = nrcg::parse_number_list(*f.kt);
  if (f.theta) cfg.theta = nrcg::parse_angle(*f.theta);
  if (f.phi) cfg.phi = nrcg::parse_angle(*f.phi);
  if (f.grid_theta) cfg.theta_grid.count = static_cast<std::size_t>(at_least(*f.grid_theta, 1, "--grid-theta"));
  if (f.grid_phi) cfg.phi_grid.count = static_cast<std::size_t>(at_least(*f.grid_phi, 1, "--grid-phi"));
  if (f.correlations) cfg.correlations = true;
  if (f.jobs) cfg.jobs = static_cast<std::size_t>(at_least(*f.jobs, 0, "--jobs"));
  if (f.out) cfg.out_path = *f.out;
  if (f.format) {
    if (*f.format == "csv") {
      cfg.format = nrcg::OutputFormat::Csv;
    } else if (*f.format == "json") {
      cfg.format = nrcg::OutputFormat::Json;
    } else {
      throw nrcg::ConfigError("--format must be csv or json");
    }
  }
  if (f.gate_sequence) cfg.protocol.gate_sequence = nrcg::parse_gate_sequence(*f.gate_sequence);
  if (f.allow_custom) cfg.protocol.allow_custom = true;
  if (f.qubit_b) {
    nlohmann::json doc = {{"model", {{"qubit_b", {{"mode", *f.qubit_b}}}}}};
    nrcg::apply_config_json(doc, cfg);
  }
  cfg.validate();
  return cfg;
}

std::string pi_units(double angle) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4gpi", angle / nrcg::kPi);
  return buf;
}

nlohmann::json cell_summary(const nrcg::GridCell& c) {
  nlohmann::json j = {{"kt", c.kt},
                      {"theta", c.theta},
                      {"phi", c.phi},
                      {"max_work", c.max_work},
                      {"argmax_iteration", c.argmax_iteration},
                      {"regime_at_max", nrcg::regime_name(c.regime_at_max)}};
  j["eta_at_max"] = c.efficiency_at_max ? nlohmann::json(*c.efficiency_at_max) : nlohmann::json(nullptr);
  return j;
}

void note_cell(const char* label, const nrcg::GridCell& c) {
  std::fprintf(stderr, "%s: max work %.6g at theta=%s phi=%s iteration %zu (%s)\n", label,
               c.max_work, pi_units(c.theta).c_str(), pi_units(c.phi).c_str(),
               c.argmax_iteration, nrcg::regime_name(c.regime_at_max).c_str());
}

void emit(const std::string& command, const nrcg::SweepConfig& cfg, const nrcg::Table& table,
          const nlohmann::json& summary) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path, std::ios::binary);
    if (!file) throw nrcg::ConfigError("cannot write '" + cfg.out_path + "'");
    os = &file;
  }
  if (cfg.format == nrcg::OutputFormat::Csv) {
    nrcg::write_csv(table, *os);
  } else {
    nlohmann::json meta = {{"command", command}, {"config", nrcg::config_to_json(cfg)}};
    if (!summary.is_null()) meta["summary"] = summary;
    *os << nrcg::table_to_json(table, meta).dump(2) << '\n';
  }
  os->flush();
  if (!*os) throw std::runtime_error("write failed");
}

int run(const std::string& command, const Flags& flags) {
  nrcg::SweepConfig cfg = resolve(flags);
  if (command == "temp-scan") {
    if (cfg.kt_grid.empty()) cfg.kt_grid = nrcg::default_temperature_ladder();
    const auto rows = nrcg::temp_scan(cfg);
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& r : rows) summary.push_back(cell_summary(r.best));
    emit(command, cfg, nrcg::temp_table(rows), summary);
    return kExitOk;
  }
  if (cfg.kt_grid.empty()) cfg.kt_grid = {nrcg::kDefaultKt};
  if (command == "grid-scan") {
    const auto res = nrcg::grid_scan(cfg);
    note_cell("grid-scan", res.best_cell());
    emit(command, cfg, nrcg::grid_table(res), {{"best", cell_summary(res.best_cell())}});
  } else if (command == "thermal-baseline") {
    const auto rep = nrcg::thermal_baseline_scan(cfg);
    note_cell("thermal", rep.thermal.best_cell());
    note_cell("pure", rep.pure.best_cell());
    std::fprintf(stderr, "relative change: %.4g%%\n", rep.relative_change_pct);
    emit(command, cfg, nrcg::baseline_table(rep),
         {{"thermal_best", cell_summary(rep.thermal.best_cell())},
          {"pure_best", cell_summary(rep.pure.best_cell())},
          {"relative_change_pct", rep.relative_change_pct}});
  } else if (command == "trace") {
    const auto rep = nrcg::trace_report(cfg);
    emit(command, cfg, nrcg::trace_table(rep),
         {{"bipartition_xy", rep.bipartition.label()},
          {"bipartition_yx", rep.bipartition.swapped().label()}});
  } else if (command == "cnot-compare") {
    const auto cmp = nrcg::cnot_compare(cfg);
    std::fprintf(stderr, "max cycle-boundary difference: %.3g (%s)\n", cmp.max_cycle_diff,
                 cmp.equality_enforced ? "enforced" : "informational");
    emit(command, cfg, nrcg::cnot_table(cmp),
         {{"max_cycle_diff", cmp.max_cycle_diff}, {"equality_enforced", cmp.equality_enforced}});
  } else if (command == "pcc-report") {
    cfg.correlations = true;
    const auto rep = nrcg::trace_report(cfg);
    emit(command, cfg, nrcg::pcc_table(nrcg::pcc_rows(rep)),
         {{"bipartition_xy", rep.bipartition.label()},
          {"bipartition_yx", rep.bipartition.swapped().label()}});
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-matrix simulator for an N-th root CNOT quantum heat engine"};
  app.require_subcommand(1);
  Flags flags;
  const char* commands[][2] = {
      {"temp-scan", "Maximum work over the theta-phi grid for each temperature"},
      {"grid-scan", "Maximum work for every (theta, phi) at one temperature"},
      {"thermal-baseline", "Compare against qubit B with its coherences removed"},
      {"trace", "Per-iteration energies and optional correlation measures"},
      {"cnot-compare", "N-th root gates next to the full CNOT over the same cycles"},
      {"pcc-report", "Pearson coefficients between energies and correlation measures"},
  };
  for (const auto& c : commands) add_common(app.add_subcommand(c[0], c[1]), flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, flags);
  } catch (const nrcg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nrcg::InvalidArgument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nrcg::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const nrcg::UndefinedValue& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
