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

#ifndef NRCG_PROTOCOL_HPP
#define NRCG_PROTOCOL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nrcg/density_matrix.hpp"
#include "nrcg/linalg.hpp"
#include "nrcg/model.hpp"

namespace nrcg {

inline constexpr int kDefaultRoot = 15;

/// Qubit labels, most significant tensor factor first.
inline constexpr std::size_t kQubitA = 0;
inline constexpr std::size_t kQubitB = 1;
inline constexpr std::size_t kQubitC = 2;

enum class CaseId { Case1 = 1, Case2 = 2 };

enum class GateDirection { AControlsB, BControlsA };

/// A control -> target pair inside the per-iteration circuit.
struct GateLink {
  std::size_t control = kQubitA;
  std::size_t target = kQubitB;

  friend bool operator==(const GateLink&, const GateLink&) = default;
};

/// N-th root of CNOT between two qubits of the register.
struct NrcgGate {
  int n_root = kDefaultRoot;
  std::size_t control = kQubitA;
  std::size_t target = kQubitB;
};

struct ProtocolSpec {
  CaseId case_id = CaseId::Case1;
  std::size_t n_qubits = 2;
  int n_root = kDefaultRoot;
  /// Empty means "use the default sequence for case_id / n_qubits".
  std::vector<GateLink> gate_sequence;
  /// Accept overrides that break the Case 1 / Case 2 structure.
  bool allow_custom = false;
};

/// Default per-iteration gate order, applied left to right.
std::vector<GateLink> default_gate_sequence(CaseId case_id, std::size_t n_qubits);

/// Validated gate list for the spec (default or override). Throws
/// InvalidArgument for malformed gates and for case-structure violations
/// unless allow_custom is set.
std::vector<NrcgGate> resolve_gates(const ProtocolSpec& spec);

/// 4x4 N-th root CNOT on a qubit pair, basis |00>, |01>, |10>, |11> with
/// the first label most significant. N = 1 is the ordinary CNOT.
ComplexMatrix nrcg_matrix(int n_root, GateDirection direction);

/// Lifts a gate to the full 2^n register; identity on the other qubits.
ComplexMatrix embed_gate(const NrcgGate& gate, std::size_t n_qubits);

/// One embedded unitary per gate, in application order.
std::vector<ComplexMatrix> circuit_for(const ProtocolSpec& spec);

/// The per-iteration unitary G_k ... G_2 G_1.
ComplexMatrix iteration_unitary(const ProtocolSpec& spec);

/// A protocol with its per-iteration unitary composed once.
class CompiledProtocol {
 public:
  explicit CompiledProtocol(ProtocolSpec spec);

  const ProtocolSpec& spec() const noexcept { return spec_; }
  const ComplexMatrix& unitary() const noexcept { return unitary_; }
  std::size_t n_qubits() const noexcept { return spec_.n_qubits; }

 private:
  ProtocolSpec spec_;
  ComplexMatrix unitary_;
};

struct StateTrace {
  std::vector<DensityMatrix> states;  // states[k] after k iterations
  ProtocolSpec spec;
  std::optional<InitConfig> init;
};

/// Applies the circuit `iterations` times; returns iterations + 1 states.
/// Throws NumericalError if a state loses unit trace or Hermiticity.
StateTrace run_trace(const DensityMatrix& init, const CompiledProtocol& protocol,
                     std::size_t iterations);
StateTrace run_trace(const DensityMatrix& init, const ProtocolSpec& spec,
                     std::size_t iterations);
StateTrace run_trace(const InitConfig& init, const QubitHamiltonian& h,
                     const ProtocolSpec& spec, std::size_t iterations);

/// "A>B,B>C" <-> gate links. Throws ConfigError on malformed input.
std::vector<GateLink> parse_gate_sequence(std::string_view text);
std::string format_gate_sequence(const std::vector<GateLink>& links);

std::string_view qubit_name(std::size_t qubit);
std::string case_name(CaseId case_id);

/// Default run length: 60 iterations for 2 qubits, 150 for 3.
std::size_t default_iterations(std::size_t n_qubits);

}  // namespace nrcg

#endif  // NRCG_PROTOCOL_HPP
