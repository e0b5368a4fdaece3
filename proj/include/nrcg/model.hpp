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

#ifndef NRCG_MODEL_HPP
#define NRCG_MODEL_HPP

#include <cstddef>
#include <variant>

#include "nrcg/density_matrix.hpp"
#include "nrcg/linalg.hpp"

// Energies are in units of the excited level eps2 and k_B = 1, so every
// temperature below is a k_B T value in the same units.
namespace nrcg {

inline constexpr double kPi = 3.14159265358979323846;

/// Single-qubit Hamiltonian diag(eps1, eps2).
struct QubitHamiltonian {
  double eps1 = 0.0;
  double eps2 = 1.0;

  /// Throws InvalidArgument when eps2 < eps1.
  void validate() const;
  ComplexMatrix matrix() const;
};

struct PureInit {
  double theta = 0.0;
  double phi = 0.0;
};
struct GibbsInit {
  double kt = 1.0;
};
/// Diagonal state with the populations of PureInit{theta, *}.
struct DephasedInit {
  double theta = 0.0;
};
using QubitBMode = std::variant<PureInit, GibbsInit, DephasedInit>;

struct InitConfig {
  double kt = 40.0;  // qubits A and C
  QubitBMode qubit_b = PureInit{};
  std::size_t n_qubits = 2;

  void validate() const;
};

DensityMatrix gibbs_state(const QubitHamiltonian& h, double kt);
DensityMatrix pure_state(double theta, double phi);
DensityMatrix dephased_state(double theta);

DensityMatrix qubit_b_state(const QubitBMode& mode, const QubitHamiltonian& h);

/// rho_A (x) rho_B [(x) rho_C] with A and C in the same Gibbs state.
DensityMatrix initial_system_state(const InitConfig& cfg,
                                   const QubitHamiltonian& h);

/// Non-interacting sum of identical local terms on 2 or 3 qubits.
ComplexMatrix build_system_hamiltonian(const QubitHamiltonian& h,
                                       std::size_t n_qubits);

/// Throws InvalidArgument unless theta in [0, pi] and phi in [0, 2 pi].
void validate_angles(double theta, double phi);

}  // namespace nrcg

#endif  // NRCG_MODEL_HPP
