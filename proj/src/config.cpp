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

#include "nrcg/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nrcg/errors.hpp"

namespace nrcg {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_number(const std::string& text, std::string_view what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw ConfigError("cannot parse " + std::string(what) + " '" + text + "'");
  }
  return v;
}

void check_keys(const json& obj, std::string_view section,
                std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError("section '" + std::string(section) + "' must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) {
      throw ConfigError("unknown key '" + key + "' in section '" + std::string(section) + "'");
    }
  }
}

double angle_value(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_angle(v.get<std::string>());
  throw ConfigError("angles must be numbers or strings like \"0.5pi\"");
}

Grid1D grid_value(const json& v, std::string_view name, Grid1D g) {
  check_keys(v, name, {"start", "stop", "count"});
  if (v.contains("start")) g.start = angle_value(v["start"]);
  if (v.contains("stop")) g.stop = angle_value(v["stop"]);
  if (v.contains("count")) {
    const auto c = v["count"].get<long long>();
    if (c < 1) throw ConfigError(std::string(name) + ".count must be >= 1");
    g.count = static_cast<std::size_t>(c);
  }
  return g;
}

std::size_t positive_size(const json& v, std::string_view name, long long min_value) {
  const auto x = v.get<long long>();
  if (x < min_value) {
    throw ConfigError(std::string(name) + " must be >= " + std::to_string(min_value));
  }
  return static_cast<std::size_t>(x);
}

QubitBKind qubit_b_kind(const std::string& s) {
  if (s == "pure") return QubitBKind::Pure;
  if (s == "dephased") return QubitBKind::Dephased;
  if (s == "gibbs") return QubitBKind::Gibbs;
  throw ConfigError("qubit_b.mode must be pure, dephased or gibbs, got '" + s + "'");
}

void apply_sections(const json& doc, SweepConfig& cfg) {
  check_keys(doc, "<root>", {"protocol", "model", "grid", "point", "run", "discord", "output"});
  if (doc.contains("protocol")) {
    const json& p = doc["protocol"];
    check_keys(p, "protocol", {"case", "qubits", "root", "gate_sequence", "allow_custom"});
    if (p.contains("case")) {
      const int c = p["case"].get<int>();
      if (c != 1 && c != 2) throw ConfigError("protocol.case must be 1 or 2");
      cfg.protocol.case_id = static_cast<CaseId>(c);
    }
    if (p.contains("qubits")) cfg.protocol.n_qubits = positive_size(p["qubits"], "protocol.qubits", 2);
    if (p.contains("root")) cfg.protocol.n_root = static_cast<int>(positive_size(p["root"], "protocol.root", 1));
    if (p.contains("gate_sequence")) {
      const json& g = p["gate_sequence"];
      if (g.is_null()) {
        cfg.protocol.gate_sequence.clear();
      } else if (g.is_string()) {
        cfg.protocol.gate_sequence = parse_gate_sequence(g.get<std::string>());
      } else {
        std::string joined;
        for (const auto& item : g) joined += (joined.empty() ? "" : ",") + item.get<std::string>();
        cfg.protocol.gate_sequence = parse_gate_sequence(joined);
      }
    }
    if (p.contains("allow_custom")) cfg.protocol.allow_custom = p["allow_custom"].get<bool>();
  }
  if (doc.contains("model")) {
    const json& m = doc["model"];
    check_keys(m, "model", {"eps1", "eps2", "kt", "qubit_b"});
    if (m.contains("eps1")) cfg.hamiltonian.eps1 = m["eps1"].get<double>();
    if (m.contains("eps2")) cfg.hamiltonian.eps2 = m["eps2"].get<double>();
    if (m.contains("kt")) {
      const json& k = m["kt"];
      cfg.kt_grid = k.is_array() ? k.get<std::vector<double>>() : std::vector<double>{k.get<double>()};
    }
    if (m.contains("qubit_b")) {
      const json& b = m["qubit_b"];
      check_keys(b, "model.qubit_b", {"mode", "kt"});
      if (b.contains("mode")) cfg.qubit_b = qubit_b_kind(b["mode"].get<std::string>());
      if (b.contains("kt")) cfg.kt_b = b["kt"].get<double>();
    }
  }
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    check_keys(g, "grid", {"theta", "phi"});
    if (g.contains("theta")) cfg.theta_grid = grid_value(g["theta"], "grid.theta", cfg.theta_grid);
    if (g.contains("phi")) cfg.phi_grid = grid_value(g["phi"], "grid.phi", cfg.phi_grid);
  }
  if (doc.contains("point")) {
    const json& p = doc["point"];
    check_keys(p, "point", {"theta", "phi"});
    if (p.contains("theta")) cfg.theta = angle_value(p["theta"]);
    if (p.contains("phi")) cfg.phi = angle_value(p["phi"]);
  }
  if (doc.contains("run")) {
    const json& r = doc["run"];
    check_keys(r, "run", {"iterations", "correlations", "jobs"});
    if (r.contains("iterations")) cfg.iterations = positive_size(r["iterations"], "run.iterations", 0);
    if (r.contains("correlations")) cfg.correlations = r["correlations"].get<bool>();
    if (r.contains("jobs")) cfg.jobs = positive_size(r["jobs"], "run.jobs", 0);
  }
  if (doc.contains("discord")) {
    const json& d = doc["discord"];
    check_keys(d, "discord", {"grid_step_1q", "grid_step_2q", "min_step", "refine"});
    if (d.contains("grid_step_1q")) cfg.discord.grid_step_1q = angle_value(d["grid_step_1q"]);
    if (d.contains("grid_step_2q")) cfg.discord.grid_step_2q = angle_value(d["grid_step_2q"]);
    if (d.contains("min_step")) cfg.discord.min_step = angle_value(d["min_step"]);
    if (d.contains("refine")) cfg.discord.refine = d["refine"].get<bool>();
  }
  if (doc.contains("output")) {
    const json& o = doc["output"];
    check_keys(o, "output", {"path", "format"});
    if (o.contains("path")) cfg.out_path = o["path"].get<std::string>();
    if (o.contains("format")) {
      const std::string f = o["format"].get<std::string>();
      if (f == "csv") {
        cfg.format = OutputFormat::Csv;
      } else if (f == "json") {
        cfg.format = OutputFormat::Json;
      } else {
        throw ConfigError("output.format must be csv or json");
      }
    }
  }
}

json grid_json(const Grid1D& g) {
  return {{"start", g.start}, {"stop", g.stop}, {"count", g.count}};
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string s = trim(text);
  if (s.empty()) throw ConfigError("empty angle");
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower.size() >= 2 && lower.compare(lower.size() - 2, 2, "pi") == 0) {
    std::string coeff = trim(std::string_view(s).substr(0, s.size() - 2));
    if (!coeff.empty() && coeff.back() == '*') coeff = trim(std::string_view(coeff).substr(0, coeff.size() - 1));
    double k = 1.0;
    if (coeff == "-") {
      k = -1.0;
    } else if (!coeff.empty() && coeff != "+") {
      k = parse_number(coeff, "angle");
    }
    return k * kPi;
  }
  return parse_number(s, "angle");
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(trim(item), "number"));
  if (out.empty()) throw ConfigError("empty number list");
  return out;
}

void apply_config_json(const nlohmann::json& doc, SweepConfig& cfg) {
  try {
    apply_sections(doc, cfg);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

void apply_config_file(const std::string& path, SweepConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  apply_config_json(doc, cfg);
}

std::string format_name(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

std::string qubit_b_name(QubitBKind k) {
  switch (k) {
    case QubitBKind::Pure:
      return "pure";
    case QubitBKind::Dephased:
      return "dephased";
    case QubitBKind::Gibbs:
      return "gibbs";
  }
  return "?";
}

nlohmann::json config_to_json(const SweepConfig& cfg) {
  std::vector<GateLink> links = cfg.protocol.gate_sequence.empty()
                                    ? default_gate_sequence(cfg.protocol.case_id, cfg.protocol.n_qubits)
                                    : cfg.protocol.gate_sequence;
  const auto [theta, phi] = cfg.resolved_point();
  json out;
  out["protocol"] = {{"case", static_cast<int>(cfg.protocol.case_id)},
                     {"qubits", cfg.protocol.n_qubits},
                     {"root", cfg.protocol.n_root},
                     {"gate_sequence", format_gate_sequence(links)},
                     {"allow_custom", cfg.protocol.allow_custom}};
  json qb = {{"mode", qubit_b_name(cfg.qubit_b)}};
  if (cfg.qubit_b == QubitBKind::Gibbs) qb["kt"] = cfg.kt_b;
  out["model"] = {{"eps1", cfg.hamiltonian.eps1},
                  {"eps2", cfg.hamiltonian.eps2},
                  {"kt", cfg.kt_grid.empty() ? std::vector<double>{kDefaultKt} : cfg.kt_grid},
                  {"qubit_b", qb}};
  out["grid"] = {{"theta", grid_json(cfg.theta_grid)}, {"phi", grid_json(cfg.phi_grid)}};
  out["point"] = {{"theta", theta}, {"phi", phi}};
  out["run"] = {{"iterations", cfg.resolved_iterations()},
                {"correlations", cfg.correlations},
                {"jobs", cfg.jobs}};
  out["discord"] = {{"grid_step_1q", cfg.discord.grid_step_1q},
                    {"grid_step_2q", cfg.discord.grid_step_2q},
                    {"min_step", cfg.discord.min_step},
                    {"refine", cfg.discord.refine}};
  out["output"] = {{"path", cfg.out_path}, {"format", format_name(cfg.format)}};
  return out;
}

}  // namespace nrcg
