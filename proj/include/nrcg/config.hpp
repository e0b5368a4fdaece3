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

#ifndef NRCG_CONFIG_HPP
#define NRCG_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nrcg/sweeps.hpp"

namespace nrcg {

/// "0.79pi", "pi", "-0.5*pi" or a plain number of radians.
double parse_angle(std::string_view text);
/// Comma-separated numbers, e.g. "0.1,1,1e4".
std::vector<double> parse_number_list(std::string_view text);

/// Overlays a JSON document onto cfg. Sections: protocol, model, grid,
/// point, run, discord, output. Unknown keys are rejected with ConfigError.
void apply_config_json(const nlohmann::json& doc, SweepConfig& cfg);
/// Reads and applies a JSON config file. Throws ConfigError.
void apply_config_file(const std::string& path, SweepConfig& cfg);

/// Fully resolved config with defaults filled in, in the file layout.
nlohmann::json config_to_json(const SweepConfig& cfg);

std::string format_name(OutputFormat f);
std::string qubit_b_name(QubitBKind k);

}  // namespace nrcg

#endif  // NRCG_CONFIG_HPP
