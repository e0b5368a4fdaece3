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

#ifndef NRCG_THERMO_HPP
#define NRCG_THERMO_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "nrcg/density_matrix.hpp"
#include "nrcg/linalg.hpp"
#include "nrcg/model.hpp"
#include "nrcg/protocol.hpp"

namespace nrcg {

/// Tolerance on the engine inequalities: ">= 0" is ">= -tol", "< 0" is "< -tol".
inline constexpr double kRegimeTol = 1e-12;

enum class Regime { HeatEngine, Other };

struct EnergyRecord {
  std::size_t iteration = 0;
  double u_sys = 0.0;
  std::vector<double> u_per_qubit;
  double du_sys = 0.0;
  std::vector<double> du_per_qubit;
  double work = 0.0;  // always -du_sys
  Regime regime = Regime::Other;
  std::optional<double> efficiency;
};

/// Re Tr[rho h]. Throws InvalidArgument on a dimension mismatch.
double internal_energy(const DensityMatrix& rho, const ComplexMatrix& h);

/// Local energies Tr[rho_j h] of each single-qubit marginal.
std::vector<double> local_energies(const DensityMatrix& rho, const QubitHamiltonian& h);

/// The strictly most energetic qubit, or nullopt on a tie.
std::optional<std::size_t> hot_qubit(const std::vector<double>& initial_energies);

/// Engine conditions with qubit B hot. For any other hot qubit (or none)
/// the mirrored conditions are not defined and the result is Other.
Regime classify_regime(const EnergyRecord& rec, std::optional<std::size_t> hot);

/// -work / dU_hot. Throws StateError outside the HeatEngine regime and
/// UndefinedValue when dU_hot vanishes.
double efficiency(const EnergyRecord& rec, std::size_t hot);

/// One record per state of the trace, deltas against states[0]. h_sys is
/// the joint Hamiltonian used for u_sys.
std::vector<EnergyRecord> delta_u(const StateTrace& trace, const ComplexMatrix& h_sys,
                                  const QubitHamiltonian& h_local);
std::vector<EnergyRecord> delta_u(const StateTrace& trace, const QubitHamiltonian& h_local);

}  // namespace nrcg

#endif  // NRCG_THERMO_HPP
