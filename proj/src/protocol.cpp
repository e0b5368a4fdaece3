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

#include "nrcg/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "nrcg/errors.hpp"

namespace nrcg {

namespace {

std::size_t qubit_from_name(char c) {
  switch (c) {
    case 'A':
    case 'a':
      return kQubitA;
    case 'B':
    case 'b':
      return kQubitB;
    case 'C':
    case 'c':
      return kQubitC;
    default:
      throw ConfigError(std::string("unknown qubit label '") + c + "'");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

void check_case_structure(const ProtocolSpec& spec,
                          const std::vector<GateLink>& links) {
  const std::size_t expected_len =
      (spec.case_id == CaseId::Case1 ? 1 : 2) * (spec.n_qubits - 1);
  if (links.size() != expected_len) {
    throw InvalidArgument(case_name(spec.case_id) + " on " +
                          std::to_string(spec.n_qubits) + " qubits expects " +
                          std::to_string(expected_len) + " gates per iteration, got " +
                          std::to_string(links.size()) +
                          " (use allow_custom to override)");
  }
  if (spec.case_id == CaseId::Case1) {
    for (const auto& l : links) {
      if (l.target == kQubitA) {
        throw InvalidArgument("Case 1 never targets qubit A (use allow_custom to override)");
      }
    }
  } else {
    std::vector<bool> touched(spec.n_qubits, false);
    for (const auto& l : links) touched[l.control] = touched[l.target] = true;
    if (std::find(touched.begin(), touched.end(), false) != touched.end()) {
      throw InvalidArgument(
          "Case 2 must use every qubit as control or target (use allow_custom to override)");
    }
  }
}

// Maps each basis index through a permutation-free lift of a two-qubit gate.
ComplexMatrix lift_pair(const ComplexMatrix& gate4, std::size_t first,
                        std::size_t second, std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t shift_first = n_qubits - 1 - first;
  const std::size_t shift_second = n_qubits - 1 - second;
  const std::size_t mask = (std::size_t{1} << shift_first) | (std::size_t{1} << shift_second);
  ComplexMatrix out(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t sub_col =
        (((col >> shift_first) & 1U) << 1U) | ((col >> shift_second) & 1U);
    const std::size_t rest = col & ~mask;
    for (std::size_t sub_row = 0; sub_row < 4; ++sub_row) {
      const Complex amp = gate4(sub_row, sub_col);
      if (amp == Complex{}) continue;
      const std::size_t row = rest | ((sub_row >> 1U) << shift_first) |
                              ((sub_row & 1U) << shift_second);
      out(row, col) += amp;
    }
  }
  return out;
}

}  // namespace

std::string_view qubit_name(std::size_t qubit) {
  static constexpr std::string_view names[] = {"A", "B", "C"};
  return qubit < 3 ? names[qubit] : std::string_view("?");
}

std::string case_name(CaseId case_id) {
  return case_id == CaseId::Case1 ? "Case 1" : "Case 2";
}

std::size_t default_iterations(std::size_t n_qubits) {
  return n_qubits == 3 ? 150 : 60;
}

std::vector<GateLink> default_gate_sequence(CaseId case_id, std::size_t n_qubits) {
  if (n_qubits != 2 && n_qubits != 3) {
    throw InvalidArgument("protocols are defined for 2 or 3 qubits");
  }
  const GateLink ab{kQubitA, kQubitB};
  const GateLink ba{kQubitB, kQubitA};
  const GateLink bc{kQubitB, kQubitC};
  const GateLink cb{kQubitC, kQubitB};
  if (case_id == CaseId::Case1) {
    if (n_qubits == 2) return {ab};
    return {ab, bc};
  }
  if (n_qubits == 2) return {ab, ba};
  // The B-C pair is nested inside the A-B pair.
  return {ab, bc, cb, ba};
}

std::vector<NrcgGate> resolve_gates(const ProtocolSpec& spec) {
  if (spec.n_qubits != 2 && spec.n_qubits != 3) {
    throw InvalidArgument("protocols are defined for 2 or 3 qubits");
  }
  if (spec.n_root < 1) throw InvalidArgument("root order N must be >= 1");
  const std::vector<GateLink> links = spec.gate_sequence.empty()
                                          ? default_gate_sequence(spec.case_id, spec.n_qubits)
                                          : spec.gate_sequence;
  if (links.empty()) throw InvalidArgument("gate sequence is empty");
  for (const auto& l : links) {
    if (l.control >= spec.n_qubits || l.target >= spec.n_qubits) {
      throw InvalidArgument("gate refers to a qubit outside the register");
    }
    if (l.control == l.target) {
      throw InvalidArgument("gate control and target must differ");
    }
  }
  if (!spec.allow_custom) check_case_structure(spec, links);

  std::vector<NrcgGate> gates;
  gates.reserve(links.size());
  for (const auto& l : links) gates.push_back({spec.n_root, l.control, l.target});
  return gates;
}

ComplexMatrix nrcg_matrix(int n_root, GateDirection direction) {
  if (n_root < 1) throw InvalidArgument("nrcg_matrix: N must be >= 1");
  const Complex phase = std::polar(1.0, kPi / n_root);
  Complex s = 0.5 + 0.5 * phase;
  Complex p = 0.5 - 0.5 * phase;
  if (n_root == 1) {
    // Exact CNOT rather than 0.5 + 0.5 * e^{i pi} ~ 1e-17i.
    s = 0.0;
    p = 1.0;
  }
  ComplexMatrix m = ComplexMatrix::identity(4);
  if (direction == GateDirection::AControlsB) {
    m(2, 2) = s;
    m(2, 3) = p;
    m(3, 2) = p;
    m(3, 3) = s;
  } else {
    m(1, 1) = s;
    m(1, 3) = p;
    m(3, 1) = p;
    m(3, 3) = s;
  }
  return m;
}

ComplexMatrix embed_gate(const NrcgGate& gate, std::size_t n_qubits) {
  if (n_qubits < 2 || n_qubits > 3) {
    throw InvalidArgument("embed_gate: register must have 2 or 3 qubits");
  }
  if (gate.control >= n_qubits || gate.target >= n_qubits) {
    throw InvalidArgument("embed_gate: qubit index out of range");
  }
  if (gate.control == gate.target) {
    throw InvalidArgument("embed_gate: control and target coincide");
  }
  // The A-controls-B layout read with (control, target) as the pair order.
  return lift_pair(nrcg_matrix(gate.n_root, GateDirection::AControlsB), gate.control,
                   gate.target, n_qubits);
}

std::vector<ComplexMatrix> circuit_for(const ProtocolSpec& spec) {
  std::vector<ComplexMatrix> out;
  for (const auto& g : resolve_gates(spec)) out.push_back(embed_gate(g, spec.n_qubits));
  return out;
}

ComplexMatrix iteration_unitary(const ProtocolSpec& spec) {
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << spec.n_qubits);
  for (const auto& g : circuit_for(spec)) u = g * u;
  return u;
}

CompiledProtocol::CompiledProtocol(ProtocolSpec spec)
    : spec_(std::move(spec)), unitary_(iteration_unitary(spec_)) {}

StateTrace run_trace(const DensityMatrix& init, const CompiledProtocol& protocol,
                     std::size_t iterations) {
  if (init.n_qubits() != protocol.n_qubits()) {
    throw InvalidArgument("run_trace: state has " + std::to_string(init.n_qubits()) +
                          " qubits, protocol expects " +
                          std::to_string(protocol.n_qubits()));
  }
  StateTrace trace{{}, protocol.spec(), std::nullopt};
  trace.states.reserve(iterations + 1);
  trace.states.push_back(init);
  for (std::size_t k = 0; k < iterations; ++k) {
    ComplexMatrix next = conjugate_by(protocol.unitary(), trace.states.back().matrix());
    try {
      trace.states.push_back(DensityMatrix::trusted(std::move(next)));
    } catch (const InvalidArgument& e) {
      throw NumericalError("run_trace: invalid state at iteration " +
                           std::to_string(k + 1) + ": " + e.what());
    }
  }
  return trace;
}

StateTrace run_trace(const DensityMatrix& init, const ProtocolSpec& spec,
                     std::size_t iterations) {
  return run_trace(init, CompiledProtocol(spec), iterations);
}

StateTrace run_trace(const InitConfig& init, const QubitHamiltonian& h,
                     const ProtocolSpec& spec, std::size_t iterations) {
  if (init.n_qubits != spec.n_qubits) {
    throw InvalidArgument("run_trace: init and protocol disagree on qubit count");
  }
  StateTrace trace = run_trace(initial_system_state(init, h), spec, iterations);
  trace.init = init;
  return trace;
}

std::vector<GateLink> parse_gate_sequence(std::string_view text) {
  std::vector<GateLink> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto arrow = item.find('>');
    if (arrow == std::string_view::npos) {
      throw ConfigError("gate '" + std::string(item) + "' must look like A>B");
    }
    const std::string_view lhs = trim(item.substr(0, arrow));
    const std::string_view rhs = trim(item.substr(arrow + 1));
    if (lhs.size() != 1 || rhs.size() != 1) {
      throw ConfigError("gate '" + std::string(item) + "' must look like A>B");
    }
    out.push_back({qubit_from_name(lhs[0]), qubit_from_name(rhs[0])});
  }
  if (out.empty()) throw ConfigError("gate sequence is empty");
  return out;
}

std::string format_gate_sequence(const std::vector<GateLink>& links) {
  std::string out;
  for (const auto& l : links) {
    if (!out.empty()) out += ',';
    out += qubit_name(l.control);
    out += '>';
    out += qubit_name(l.target);
  }
  return out;
}

}  // namespace nrcg
