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

#include "nrcg/thermo.hpp"

#include <array>
#include <cmath>
#include <string>

#include "nrcg/errors.hpp"

namespace nrcg {

double internal_energy(const DensityMatrix& rho, const ComplexMatrix& h) {
  if (h.dim() != rho.dim()) {
    throw InvalidArgument("internal_energy: Hamiltonian has dim " + std::to_string(h.dim()) +
                          ", state has dim " + std::to_string(rho.dim()));
  }
  const ComplexMatrix& m = rho.matrix();
  Complex acc = 0.0;
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) acc += m(i, k) * h(k, i);
  }
  return acc.real();
}

std::vector<double> local_energies(const DensityMatrix& rho, const QubitHamiltonian& h) {
  const ComplexMatrix hm = h.matrix();
  std::vector<double> out(rho.n_qubits());
  for (std::size_t q = 0; q < rho.n_qubits(); ++q) {
    const std::array<std::size_t, 1> keep{q};
    out[q] = internal_energy(rho.reduce(keep), hm);
  }
  return out;
}

std::optional<std::size_t> hot_qubit(const std::vector<double>& initial_energies) {
  if (initial_energies.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t q = 1; q < initial_energies.size(); ++q) {
    if (initial_energies[q] > initial_energies[best]) best = q;
  }
  for (std::size_t q = 0; q < initial_energies.size(); ++q) {
    if (q != best && !(initial_energies[best] > initial_energies[q] + kRegimeTol)) {
      return std::nullopt;
    }
  }
  return best;
}

Regime classify_regime(const EnergyRecord& rec, std::optional<std::size_t> hot) {
  if (!hot || *hot != kQubitB || rec.du_per_qubit.size() < 2) return Regime::Other;
  const auto& du = rec.du_per_qubit;
  bool ok = du[kQubitA] >= -kRegimeTol && du[kQubitB] < -kRegimeTol &&
            rec.du_sys < -kRegimeTol;
  if (du.size() > 2) ok = ok && du[kQubitC] >= -kRegimeTol;
  return ok ? Regime::HeatEngine : Regime::Other;
}

double efficiency(const EnergyRecord& rec, std::size_t hot) {
  if (rec.regime != Regime::HeatEngine) {
    throw StateError("efficiency: iteration " + std::to_string(rec.iteration) +
                     " is not in the heat-engine regime");
  }
  if (hot >= rec.du_per_qubit.size()) throw InvalidArgument("efficiency: bad hot qubit");
  const double dq = rec.du_per_qubit[hot];
  if (dq == 0.0) throw UndefinedValue("efficiency: hot qubit exchanged no heat");
  return -rec.work / dq;
}

std::vector<EnergyRecord> delta_u(const StateTrace& trace, const ComplexMatrix& h_sys,
                                  const QubitHamiltonian& h_local) {
  std::vector<EnergyRecord> out;
  if (trace.states.empty()) return out;
  out.reserve(trace.states.size());
  const std::vector<double> u0 = local_energies(trace.states.front(), h_local);
  const double usys0 = internal_energy(trace.states.front(), h_sys);
  const std::optional<std::size_t> hot = hot_qubit(u0);
  for (std::size_t k = 0; k < trace.states.size(); ++k) {
    EnergyRecord rec;
    rec.iteration = k;
    rec.u_sys = internal_energy(trace.states[k], h_sys);
    rec.u_per_qubit = k == 0 ? u0 : local_energies(trace.states[k], h_local);
    rec.du_sys = k == 0 ? 0.0 : rec.u_sys - usys0;
    rec.du_per_qubit.resize(u0.size());
    for (std::size_t q = 0; q < u0.size(); ++q) {
      rec.du_per_qubit[q] = rec.u_per_qubit[q] - u0[q];
    }
    rec.work = -rec.du_sys;
    rec.regime = classify_regime(rec, hot);
    if (rec.regime == Regime::HeatEngine) rec.efficiency = efficiency(rec, *hot);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<EnergyRecord> delta_u(const StateTrace& trace, const QubitHamiltonian& h_local) {
  if (trace.states.empty()) return {};
  return delta_u(trace, build_system_hamiltonian(h_local, trace.states.front().n_qubits()),
                 h_local);
}

}  // namespace nrcg
