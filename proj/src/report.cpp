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

#include "nrcg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace nrcg {

namespace {

Cell opt(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

Cell idx(std::size_t v) { return static_cast<std::int64_t>(v); }

void add_cell_columns(Table& t) {
  t.columns.insert(t.columns.end(), {"kt", "theta", "phi", "max_work", "argmax_iteration",
                                     "regime_at_max", "eta_at_max"});
}

std::vector<Cell> cell_row(const GridCell& c) {
  return {c.kt,  c.theta, c.phi, c.max_work, idx(c.argmax_iteration), regime_name(c.regime_at_max),
          opt(c.efficiency_at_max)};
}

std::string csv_field(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) {
    if (s->find_first_of(",\"\n") == std::string::npos) return *s;
    std::string q = "\"";
    for (char ch : *s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  return "";
}

nlohmann::json json_value(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return nullptr;
}

}  // namespace

std::string regime_name(Regime r) { return r == Regime::HeatEngine ? "HeatEngine" : "Other"; }

std::string format_double(double v) {
  char buf[64];
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << '\n';
  }
}

nlohmann::json table_to_json(const Table& table, const nlohmann::json& meta) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json rec = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) rec[table.columns[i]] = json_value(row[i]);
    records.push_back(std::move(rec));
  }
  return {{"meta", meta}, {"records", std::move(records)}};
}

Table grid_table(const GridScanResult& res) {
  Table t;
  add_cell_columns(t);
  for (const auto& c : res.cells) t.rows.push_back(cell_row(c));
  return t;
}

Table temp_table(const std::vector<TempScanRow>& rows) {
  Table t;
  add_cell_columns(t);
  for (const auto& r : rows) t.rows.push_back(cell_row(r.best));
  return t;
}

Table baseline_table(const BaselineReport& rep) {
  Table t;
  t.columns = {"theta", "thermal_max_work", "thermal_argmax_iteration", "pure_max_work_over_phi"};
  // Pure cells are theta-major, so each theta owns a contiguous block.
  const std::size_t n_theta = rep.thermal.cells.size();
  const std::size_t per_theta = n_theta ? rep.pure.cells.size() / n_theta : 0;
  for (std::size_t i = 0; i < n_theta; ++i) {
    const GridCell& c = rep.thermal.cells[i];
    Cell pure_best = std::monostate{};
    if (per_theta > 0 && rep.pure.cells.size() == n_theta * per_theta) {
      double m = rep.pure.cells[i * per_theta].max_work;
      for (std::size_t j = 1; j < per_theta; ++j) m = std::max(m, rep.pure.cells[i * per_theta + j].max_work);
      pure_best = m;
    }
    t.rows.push_back({c.theta, c.max_work, idx(c.argmax_iteration), pure_best});
  }
  return t;
}

Table trace_table(const TraceReport& rep) {
  Table t;
  const std::size_t n = rep.trace.states.empty() ? 2 : rep.trace.states.front().n_qubits();
  t.columns = {"iteration", "dU_A", "dU_B"};
  if (n == 3) t.columns.push_back("dU_C");
  t.columns.insert(t.columns.end(), {"dU_sys", "work", "regime", "eta"});
  const bool corr = !rep.correlations.empty();
  if (corr) {
    t.columns.insert(t.columns.end(), {"MI", "CC_xy", "CC_yx", "D_xy", "D_yx"});
    if (n == 2) {
      t.columns.push_back("EOF");
    } else {
      t.columns.insert(t.columns.end(), {"EOF_AB", "EOF_BC", "EOF_AC"});
    }
  }
  for (std::size_t k = 0; k < rep.energy.size(); ++k) {
    const EnergyRecord& e = rep.energy[k];
    std::vector<Cell> row{idx(e.iteration)};
    for (double du : e.du_per_qubit) row.emplace_back(du);
    row.insert(row.end(), {e.du_sys, e.work, regime_name(e.regime), opt(e.efficiency)});
    if (corr) {
      const CorrelationRecord& c = rep.correlations[k];
      row.insert(row.end(), {c.mutual_info, c.cc_xy, c.cc_yx, c.discord_xy, c.discord_yx});
      for (double v : c.eof) row.emplace_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cnot_table(const CnotComparison& cmp) {
  Table t;
  t.columns = {"iteration", "cycle", "work_nrcg", "work_cnot"};
  const auto n_root = static_cast<std::size_t>(cmp.n_root);
  for (const auto& e : cmp.nrcg) {
    Cell cycle = std::monostate{};
    Cell cnot = std::monostate{};
    if (e.iteration % n_root == 0 && e.iteration / n_root < cmp.cnot.size()) {
      cycle = idx(e.iteration / n_root);
      cnot = cmp.cnot[e.iteration / n_root].work;
    }
    t.rows.push_back({idx(e.iteration), cycle, e.work, cnot});
  }
  return t;
}

Table pcc_table(const std::vector<PccRow>& rows) {
  Table t;
  t.columns = {"target", "measure", "bipartition", "pcc", "note"};
  for (const auto& r : rows) t.rows.push_back({r.target, r.measure, r.bipartition, opt(r.value), r.note});
  return t;
}

}  // namespace nrcg
