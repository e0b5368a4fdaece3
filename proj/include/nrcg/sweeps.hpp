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

#ifndef NRCG_SWEEPS_HPP
#define NRCG_SWEEPS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nrcg/correlations.hpp"
#include "nrcg/model.hpp"
#include "nrcg/protocol.hpp"
#include "nrcg/thermo.hpp"

namespace nrcg {

/// count evenly spaced points on [start, stop]; count = 1 gives {start}.
struct Grid1D {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  std::vector<double> values() const;
};

enum class QubitBKind { Pure, Dephased, Gibbs };
enum class OutputFormat { Csv, Json };

struct SweepConfig {
  ProtocolSpec protocol;
  QubitHamiltonian hamiltonian;
  /// Empty means the per-command default: {40} for single-temperature
  /// commands, default_temperature_ladder() for temp-scan.
  std::vector<double> kt_grid;
  Grid1D theta_grid{0.0, kPi, 101};
  Grid1D phi_grid{0.0, 2.0 * kPi, 201};
  /// Empty means default_iterations(n_qubits).
  std::optional<std::size_t> iterations;
  QubitBKind qubit_b = QubitBKind::Pure;
  double kt_b = 1.0;  // only for QubitBKind::Gibbs
  /// Single initialization point for trace, cnot-compare and pcc-report.
  /// Empty means default_point().
  std::optional<double> theta;
  std::optional<double> phi;
  bool correlations = false;
  std::size_t jobs = 1;
  DiscordSearch discord;
  std::string out_path;  // empty means stdout
  OutputFormat format = OutputFormat::Csv;

  std::size_t resolved_iterations() const;
  double resolved_kt() const;  // the single temperature; ConfigError if several
  std::pair<double, double> resolved_point() const;
  InitConfig init_at(double kt, double theta, double phi) const;
  /// Throws ConfigError on any invalid field.
  void validate() const;
};

inline constexpr double kDefaultKt = 40.0;

std::vector<double> default_temperature_ladder();

/// Initialization used for per-iteration reports when none is given.
std::pair<double, double> default_point(CaseId case_id, std::size_t n_qubits);

struct GridCell {
  double kt = kDefaultKt;
  double theta = 0.0;
  double phi = 0.0;
  double max_work = 0.0;
  std::size_t argmax_iteration = 0;  // smallest iteration reaching max_work
  Regime regime_at_max = Regime::Other;
  std::optional<double> efficiency_at_max;
};

/// Max work over iterations 1..M for a single initialization, evolving with
/// a precomposed unitary. Throws NumericalError if the state loses unit
/// trace or Hermiticity.
GridCell evaluate_cell(const CompiledProtocol& protocol, const QubitHamiltonian& h,
                       const InitConfig& init, std::size_t iterations);

struct GridScanResult {
  std::vector<GridCell> cells;  // theta-major, phi-minor
  std::size_t best = 0;         // first cell reaching the global max
  const GridCell& best_cell() const { return cells.at(best); }
};

GridScanResult grid_scan(const SweepConfig& cfg);
/// Same, at an explicit temperature.
GridScanResult grid_scan(const SweepConfig& cfg, double kt);

struct TempScanRow {
  double kt = 0.0;
  GridCell best;
};
std::vector<TempScanRow> temp_scan(const SweepConfig& cfg);

struct BaselineReport {
  GridScanResult thermal;  // one cell per theta, phi = 0
  GridScanResult pure;
  /// (pure max - thermal max) / thermal max, in percent.
  double relative_change_pct = 0.0;
};
BaselineReport thermal_baseline_scan(const SweepConfig& cfg);

struct CorrelationRecord {
  std::size_t iteration = 0;
  double mutual_info = 0.0;
  double discord_xy = 0.0;
  double discord_yx = 0.0;
  double cc_xy = 0.0;
  double cc_yx = 0.0;
  /// Two qubits: {EOF(A:B)}. Three qubits: pair marginals {AB, BC, AC}.
  std::vector<double> eof;
  double max_clamp = 0.0;  // largest discord clamp applied
};

/// (A:B) for two qubits, (AC:B) for three.
Bipartition default_bipartition(std::size_t n_qubits);

struct TraceReport {
  double kt = kDefaultKt;
  double theta = 0.0;
  double phi = 0.0;
  StateTrace trace;
  std::vector<EnergyRecord> energy;
  std::vector<CorrelationRecord> correlations;  // empty unless requested
  Bipartition bipartition;
};

TraceReport trace_report(const SweepConfig& cfg);

/// Correlation measures for every state of a trace (parallel over states).
std::vector<CorrelationRecord> correlation_records(const StateTrace& trace,
                                                   const Bipartition& bp,
                                                   const DiscordSearch& search,
                                                   std::size_t jobs);

struct CycleCheck {
  std::size_t cycle = 0;
  std::size_t nrcg_iteration = 0;
  double nrcg_work = 0.0;
  double cnot_work = 0.0;
};

struct CnotComparison {
  int n_root = kDefaultRoot;
  std::vector<EnergyRecord> nrcg;
  std::vector<EnergyRecord> cnot;
  std::vector<CycleCheck> cycles;
  double max_cycle_diff = 0.0;
  /// Whether cycle-boundary equality is an identity for this protocol
  /// (single-gate circuits only) and was therefore enforced.
  bool equality_enforced = false;
};

inline constexpr double kCycleEqualityTol = 1e-10;

/// NRCG run of M iterations next to a full-CNOT run of M / N iterations.
/// Throws NumericalError when an enforced cycle equality fails.
CnotComparison cnot_compare(const SweepConfig& cfg);

struct PccRow {
  std::string target;   // "work", "dU_B" or "EOF"
  std::string measure;  // "MI", "CC", "D" or "EOF"
  std::string bipartition;
  std::optional<double> value;  // empty for a constant series
  std::string note;
};

std::vector<PccRow> pcc_rows(const TraceReport& report);
std::vector<PccRow> pcc_report(const SweepConfig& cfg);

/// Runs fn(i) for i in [0, n) on up to 'jobs' threads. Results must be
/// written to per-index slots; the first exception is rethrown.
void parallel_for(std::size_t n, std::size_t jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace nrcg

#endif  // NRCG_SWEEPS_HPP
