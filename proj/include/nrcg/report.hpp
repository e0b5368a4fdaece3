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

#ifndef NRCG_REPORT_HPP
#define NRCG_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "nrcg/sweeps.hpp"

namespace nrcg {

/// Empty cells print as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// printf "%.12g".
std::string format_double(double v);

/// Header row, comma separated, LF line endings.
void write_csv(const Table& table, std::ostream& os);
/// {"meta": meta, "records": [{column: value, ...}, ...]}
nlohmann::json table_to_json(const Table& table, const nlohmann::json& meta);

Table grid_table(const GridScanResult& res);
Table temp_table(const std::vector<TempScanRow>& rows);
Table baseline_table(const BaselineReport& rep);
Table trace_table(const TraceReport& rep);
Table cnot_table(const CnotComparison& cmp);
Table pcc_table(const std::vector<PccRow>& rows);

std::string regime_name(Regime r);

}  // namespace nrcg

#endif  // NRCG_REPORT_HPP
