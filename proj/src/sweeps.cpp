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

#include "nrcg/sweeps.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "nrcg/errors.hpp"

namespace nrcg {

namespace {

constexpr std::size_t kMaxDim = 8;
constexpr double kKernelStateTol = 1e-10;
constexpr double kArgmaxTol = 1e-12;

// Split real/imaginary storage keeps the hot loop free of the library
// complex multiply and its NaN recovery path.
struct SplitMatrix {
  std::size_t dim = 0;
  std::array<double, kMaxDim * kMaxDim> re{};
  std::array<double, kMaxDim * kMaxDim> im{};

  explicit SplitMatrix(const ComplexMatrix& m) : dim(m.dim()) {
    for (std::size_t i = 0; i < dim * dim; ++i) {
      re[i] = m.data()[i].real();
      im[i] = m.data()[i].imag();
    }
  }
  SplitMatrix() = default;
};

// out = a * b (b_adjoint: out = a * b^dagger).
void multiply(const SplitMatrix& a, const SplitMatrix& b, bool b_adjoint, SplitMatrix& out) {
  const std::size_t d = a.dim;
  out.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      double sr = 0.0, si = 0.0;
      for (std::size_t k = 0; k < d; ++k) {
        const double ar = a.re[i * d + k], ai = a.im[i * d + k];
        double br, bi;
        if (b_adjoint) {
          br = b.re[j * d + k];
          bi = -b.im[j * d + k];
        } else {
          br = b.re[k * d + j];
          bi = b.im[k * d + j];
        }
        sr += ar * br - ai * bi;
        si += ar * bi + ai * br;
      }
      out.re[i * d + j] = sr;
      out.im[i * d + j] = si;
    }
  }
}

void check_kernel_state(const SplitMatrix& m, std::size_t iteration) {
  const std::size_t d = m.dim;
  double tr = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    tr += m.re[i * d + i];
    for (std::size_t j = i; j < d; ++j) {
      const double dr = m.re[i * d + j] - m.re[j * d + i];
      const double di = m.im[i * d + j] + m.im[j * d + i];
      if (std::hypot(dr, di) > kKernelStateTol) {
        throw NumericalError("state lost Hermiticity at iteration " + std::to_string(iteration));
      }
    }
  }
  if (std::abs(tr - 1.0) > kKernelStateTol) {
    throw NumericalError("state trace drifted to " + std::to_string(tr) + " at iteration " +
                         std::to_string(iteration));
  }
}

// Marginal energies from the diagonal; valid because every local term is diagonal.
void local_energies_from_diagonal(const SplitMatrix& m, std::size_t n_qubits,
                                  const QubitHamiltonian& h, std::array<double, 3>& out) {
  const std::size_t d = m.dim;
  for (std::size_t q = 0; q < n_qubits; ++q) {
    double excited = 0.0;
    const std::size_t bit = std::size_t{1} << (n_qubits - 1 - q);
    for (std::size_t i = 0; i < d; ++i) {
      if (i & bit) excited += m.re[i * d + i];
    }
    out[q] = h.eps1 * (1.0 - excited) + h.eps2 * excited;
  }
}

double system_energy(const SplitMatrix& m, const std::vector<double>& h_diag) {
  double u = 0.0;
  for (std::size_t i = 0; i < m.dim; ++i) u += m.re[i * m.dim + i] * h_diag[i];
  return u;
}

SweepConfig with_point(const SweepConfig& cfg) {
  SweepConfig out = cfg;
  const auto [theta, phi] = cfg.resolved_point();
  out.theta = theta;
  out.phi = phi;
  return out;
}

StateTrace run_point(const SweepConfig& cfg, const ProtocolSpec& spec, std::size_t iterations) {
  const auto [theta, phi] = cfg.resolved_point();
  return run_trace(cfg.init_at(cfg.resolved_kt(), theta, phi), cfg.hamiltonian, spec,
                   iterations);
}

}  // namespace

std::vector<double> Grid1D::values() const {
  if (count == 0) throw ConfigError("grid count must be >= 1");
  if (count == 1) return {start};
  std::vector<double> out(count);
  const double span = stop - start;
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = start + span * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  out.back() = stop;
  return out;
}

std::vector<double> default_temperature_ladder() {
  return {1e-3, 1e-2, 0.1, 0.2, 0.4, 1.0, 2.0, 4.0, 10.0, 20.0, 40.0, 100.0, 1e3, 1e4};
}

std::pair<double, double> default_point(CaseId case_id, std::size_t n_qubits) {
  if (case_id == CaseId::Case1) {
    return n_qubits == 2 ? std::pair{kPi, 0.17 * kPi} : std::pair{0.88 * kPi, 0.24 * kPi};
  }
  return n_qubits == 2 ? std::pair{0.83 * kPi, 0.32 * kPi} : std::pair{0.79 * kPi, 0.08 * kPi};
}

std::size_t SweepConfig::resolved_iterations() const {
  return iterations.value_or(default_iterations(protocol.n_qubits));
}

double SweepConfig::resolved_kt() const {
  if (kt_grid.empty()) return kDefaultKt;
  if (kt_grid.size() > 1) {
    throw ConfigError("this command takes a single temperature, got " +
                      std::to_string(kt_grid.size()));
  }
  return kt_grid.front();
}

std::pair<double, double> SweepConfig::resolved_point() const {
  const auto def = default_point(protocol.case_id, protocol.n_qubits);
  return {theta.value_or(def.first), phi.value_or(def.second)};
}

InitConfig SweepConfig::init_at(double kt, double th, double ph) const {
  InitConfig init;
  init.kt = kt;
  init.n_qubits = protocol.n_qubits;
  switch (qubit_b) {
    case QubitBKind::Pure:
      init.qubit_b = PureInit{th, ph};
      break;
    case QubitBKind::Dephased:
      init.qubit_b = DephasedInit{th};
      break;
    case QubitBKind::Gibbs:
      init.qubit_b = GibbsInit{kt_b};
      break;
  }
  return init;
}

void SweepConfig::validate() const {
  try {
    if (protocol.case_id != CaseId::Case1 && protocol.case_id != CaseId::Case2) {
      throw ConfigError("case must be 1 or 2");
    }
    if (protocol.n_qubits != 2 && protocol.n_qubits != 3) {
      throw ConfigError("qubits must be 2 or 3");
    }
    resolve_gates(protocol);
    hamiltonian.validate();
    for (double kt : kt_grid) {
      if (!(kt > 0.0) || !std::isfinite(kt)) {
        throw ConfigError("temperatures must be positive and finite");
      }
    }
    if (theta_grid.count == 0 || phi_grid.count == 0) {
      throw ConfigError("grid counts must be >= 1");
    }
    for (double t : theta_grid.values()) validate_angles(t, 0.0);
    for (double p : phi_grid.values()) validate_angles(0.0, p);
    if (theta || phi) {
      const auto [t, p] = resolved_point();
      validate_angles(t, p);
    }
    if (qubit_b == QubitBKind::Gibbs && !(kt_b > 0.0 && std::isfinite(kt_b))) {
      throw ConfigError("qubit-B temperature must be positive");
    }
    if (!(discord.grid_step_1q > 0.0) || !(discord.grid_step_2q > 0.0) ||
        !(discord.min_step > 0.0)) {
      throw ConfigError("discord search steps must be positive");
    }
    if (iterations && *iterations > 1000000) {
      throw ConfigError("iterations must be <= 1000000");
    }
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

void parallel_for(std::size_t n, std::size_t jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min(jobs, n);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

GridCell evaluate_cell(const CompiledProtocol& protocol, const QubitHamiltonian& h,
                       const InitConfig& init, std::size_t iterations) {
  const std::size_t n = protocol.n_qubits();
  if (init.n_qubits != n) {
    throw InvalidArgument("evaluate_cell: init and protocol disagree on qubit count");
  }
  const ComplexMatrix h_sys = build_system_hamiltonian(h, n);
  std::vector<double> h_diag(h_sys.dim());
  for (std::size_t i = 0; i < h_sys.dim(); ++i) h_diag[i] = h_sys(i, i).real();

  const SplitMatrix u(protocol.unitary());
  SplitMatrix rho(initial_system_state(init, h).matrix());
  SplitMatrix tmp;

  std::array<double, 3> u0{};
  local_energies_from_diagonal(rho, n, h, u0);
  const std::optional<std::size_t> hot = hot_qubit(std::vector<double>(u0.begin(), u0.begin() + n));
  const double usys0 = system_energy(rho, h_diag);

  GridCell cell;
  cell.kt = init.kt;
  if (const auto* p = std::get_if<PureInit>(&init.qubit_b)) {
    cell.theta = p->theta;
    cell.phi = p->phi;
  } else if (const auto* d = std::get_if<DephasedInit>(&init.qubit_b)) {
    cell.theta = d->theta;
  }
  // Record every iteration, then take the first one within kArgmaxTol of
  // the maximum so rounding cannot pick a later, analytically equal peak.
  std::vector<double> works(iterations + 1, 0.0);
  std::vector<std::array<double, 3>> local(iterations + 1, u0);
  for (std::size_t k = 1; k <= iterations; ++k) {
    multiply(u, rho, false, tmp);
    multiply(tmp, u, true, rho);
    check_kernel_state(rho, k);
    works[k] = usys0 - system_energy(rho, h_diag);
    local_energies_from_diagonal(rho, n, h, local[k]);
  }
  if (iterations == 0) return cell;
  const double peak = *std::max_element(works.begin() + 1, works.end());
  std::size_t k = 1;
  while (works[k] < peak - kArgmaxTol) ++k;

  EnergyRecord rec;
  rec.iteration = k;
  rec.work = works[k];
  rec.du_sys = -works[k];
  rec.du_per_qubit.resize(n);
  for (std::size_t q = 0; q < n; ++q) rec.du_per_qubit[q] = local[k][q] - u0[q];
  cell.max_work = works[k];
  cell.argmax_iteration = k;
  cell.regime_at_max = classify_regime(rec, hot);
  if (cell.regime_at_max == Regime::HeatEngine) {
    rec.regime = Regime::HeatEngine;
    cell.efficiency_at_max = efficiency(rec, *hot);
  }
  return cell;
}

GridScanResult grid_scan(const SweepConfig& cfg) { return grid_scan(cfg, cfg.resolved_kt()); }

GridScanResult grid_scan(const SweepConfig& cfg, double kt) {
  cfg.validate();
  const CompiledProtocol protocol(cfg.protocol);
  const std::vector<double> thetas = cfg.theta_grid.values();
  const std::vector<double> phis = cfg.phi_grid.values();
  const std::size_t iterations = cfg.resolved_iterations();

  GridScanResult res;
  res.cells.resize(thetas.size() * phis.size());
  parallel_for(res.cells.size(), cfg.jobs, [&](std::size_t idx) {
    const double theta = thetas[idx / phis.size()];
    const double phi = phis[idx % phis.size()];
    res.cells[idx] = evaluate_cell(protocol, cfg.hamiltonian, cfg.init_at(kt, theta, phi),
                                   iterations);
    if (cfg.qubit_b != QubitBKind::Pure) {
      res.cells[idx].theta = theta;
      res.cells[idx].phi = phi;
    }
  });
  double peak = -std::numeric_limits<double>::infinity();
  for (const auto& c : res.cells) peak = std::max(peak, c.max_work);
  while (res.cells[res.best].max_work < peak - kArgmaxTol) ++res.best;
  return res;
}

std::vector<TempScanRow> temp_scan(const SweepConfig& cfg) {
  const std::vector<double> kts = cfg.kt_grid.empty() ? default_temperature_ladder() : cfg.kt_grid;
  if (kts.size() < 2) throw ConfigError("temp-scan needs at least two temperatures");
  SweepConfig single = cfg;
  single.kt_grid.clear();
  std::vector<TempScanRow> rows;
  for (double kt : kts) {
    if (!(kt > 0.0) || !std::isfinite(kt)) {
      throw ConfigError("temperatures must be positive and finite");
    }
    rows.push_back({kt, grid_scan(single, kt).best_cell()});
  }
  return rows;
}

BaselineReport thermal_baseline_scan(const SweepConfig& cfg) {
  SweepConfig thermal = cfg;
  thermal.qubit_b = QubitBKind::Dephased;
  thermal.phi_grid = {0.0, 0.0, 1};
  SweepConfig pure = cfg;
  pure.qubit_b = QubitBKind::Pure;

  BaselineReport out;
  out.thermal = grid_scan(thermal);
  out.pure = grid_scan(pure);
  const double t = out.thermal.best_cell().max_work;
  if (!(t > 0.0)) {
    throw UndefinedValue("thermal baseline produces no work; relative change undefined");
  }
  out.relative_change_pct = 100.0 * (out.pure.best_cell().max_work - t) / t;
  return out;
}

Bipartition default_bipartition(std::size_t n_qubits) {
  if (n_qubits == 2) return {{kQubitA}, {kQubitB}};
  return {{kQubitA, kQubitC}, {kQubitB}};
}

std::vector<CorrelationRecord> correlation_records(const StateTrace& trace,
                                                   const Bipartition& bp,
                                                   const DiscordSearch& search,
                                                   std::size_t jobs) {
  std::vector<CorrelationRecord> out(trace.states.size());
  const Bipartition yx = bp.swapped();
  parallel_for(out.size(), jobs, [&](std::size_t k) {
    const DensityMatrix& rho = trace.states[k];
    CorrelationRecord rec;
    rec.iteration = k;
    const DiscordResult dxy = quantum_discord_detailed(rho, bp, search);
    const DiscordResult dyx = quantum_discord_detailed(rho, yx, search);
    rec.mutual_info = dxy.mutual_info;
    rec.discord_xy = dxy.discord;
    rec.discord_yx = dyx.discord;
    rec.cc_xy = std::max(0.0, dxy.mutual_info - dxy.discord);
    rec.cc_yx = std::max(0.0, dyx.mutual_info - dyx.discord);
    rec.max_clamp = std::max(dxy.clamped_by, dyx.clamped_by);
    if (rho.n_qubits() == 2) {
      rec.eof = {concurrence_eof(rho).eof};
    } else {
      rec.eof = {concurrence_eof(rho, kQubitA, kQubitB).eof,
                 concurrence_eof(rho, kQubitB, kQubitC).eof,
                 concurrence_eof(rho, kQubitA, kQubitC).eof};
    }
    out[k] = std::move(rec);
  });
  return out;
}

TraceReport trace_report(const SweepConfig& cfg) {
  cfg.validate();
  const SweepConfig pt = with_point(cfg);
  TraceReport rep;
  rep.kt = cfg.resolved_kt();
  rep.theta = *pt.theta;
  rep.phi = *pt.phi;
  rep.trace = run_point(pt, cfg.protocol, cfg.resolved_iterations());
  rep.energy = delta_u(rep.trace, cfg.hamiltonian);
  rep.bipartition = default_bipartition(cfg.protocol.n_qubits);
  if (cfg.correlations) {
    rep.correlations = correlation_records(rep.trace, rep.bipartition, cfg.discord, cfg.jobs);
  }
  return rep;
}

CnotComparison cnot_compare(const SweepConfig& cfg) {
  cfg.validate();
  const std::size_t m = cfg.resolved_iterations();
  const auto n_root = static_cast<std::size_t>(cfg.protocol.n_root);
  ProtocolSpec full = cfg.protocol;
  full.n_root = 1;

  CnotComparison out;
  out.n_root = cfg.protocol.n_root;
  out.nrcg = delta_u(run_point(cfg, cfg.protocol, m), cfg.hamiltonian);
  out.cnot = delta_u(run_point(cfg, full, m / n_root), cfg.hamiltonian);
  out.equality_enforced = resolve_gates(cfg.protocol).size() == 1;
  for (std::size_t c = 1; c < out.cnot.size(); ++c) {
    CycleCheck chk{c, c * n_root, out.nrcg[c * n_root].work, out.cnot[c].work};
    out.max_cycle_diff = std::max(out.max_cycle_diff, std::abs(chk.nrcg_work - chk.cnot_work));
    out.cycles.push_back(chk);
  }
  if (out.equality_enforced && out.max_cycle_diff > kCycleEqualityTol) {
    throw NumericalError("cycle-boundary work differs from the full CNOT run by " +
                         std::to_string(out.max_cycle_diff));
  }
  return out;
}

std::vector<PccRow> pcc_rows(const TraceReport& report) {
  if (report.correlations.size() != report.energy.size()) {
    throw StateError("pcc_rows: trace report has no correlation records");
  }
  const std::size_t len = report.energy.size();
  std::vector<double> work(len), du_b(len), mi(len), cc_xy(len), cc_yx(len), d_xy(len),
      d_yx(len), eof(len);
  for (std::size_t k = 0; k < len; ++k) {
    work[k] = report.energy[k].work;
    du_b[k] = report.energy[k].du_per_qubit.at(kQubitB);
    const CorrelationRecord& c = report.correlations[k];
    mi[k] = c.mutual_info;
    cc_xy[k] = c.cc_xy;
    cc_yx[k] = c.cc_yx;
    d_xy[k] = c.discord_xy;
    d_yx[k] = c.discord_yx;
    eof[k] = c.eof.empty() ? 0.0 : c.eof.front();
  }
  const std::string xy = report.bipartition.label();
  const std::string yx = report.bipartition.swapped().label();

  struct Series {
    std::string name;
    std::string bp;
    const std::vector<double>* values;
  };
  std::vector<Series> measures = {{"MI", xy, &mi},     {"CC", xy, &cc_xy}, {"CC", yx, &cc_yx},
                                  {"D", xy, &d_xy},    {"D", yx, &d_yx}};
  const bool two_qubit = report.trace.states.front().n_qubits() == 2;
  if (two_qubit) measures.push_back({"EOF", xy, &eof});

  std::vector<PccRow> rows;
  auto add = [&rows](const std::string& target, const Series& s, const std::vector<double>& t) {
    PccRow row{target, s.name, s.bp, std::nullopt, ""};
    try {
      row.value = pearson(t, *s.values);
    } catch (const UndefinedValue&) {
      row.note = "constant series";
    }
    rows.push_back(std::move(row));
  };
  for (const auto& s : measures) add("work", s, work);
  for (const auto& s : measures) add("dU_B", s, du_b);
  if (two_qubit) {
    add("EOF", measures[3], eof);
    add("EOF", measures[4], eof);
  }
  return rows;
}

std::vector<PccRow> pcc_report(const SweepConfig& cfg) {
  SweepConfig c = cfg;
  c.correlations = true;
  return pcc_rows(trace_report(c));
}

}  // namespace nrcg
