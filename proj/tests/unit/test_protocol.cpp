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

#include <gtest/gtest.h>

#include <array>
#include <random>

#include "nrcg/errors.hpp"
#include "nrcg/protocol.hpp"
#include "nrcg/thermo.hpp"
#include "test_util.hpp"

namespace nrcg {
namespace {

ComplexMatrix cnot_ba() {
  return ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}});
}

ProtocolSpec spec(CaseId c, std::size_t n, int root = kDefaultRoot) {
  ProtocolSpec s;
  s.case_id = c;
  s.n_qubits = n;
  s.n_root = root;
  return s;
}

std::vector<Complex> apply(const ComplexMatrix& u, std::size_t basis_index) {
  std::vector<Complex> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) out[i] = u(i, basis_index);
  return out;
}

TEST(NrcgMatrix, RootOneIsExactCnot) {
  EXPECT_EQ(nrcg_matrix(1, GateDirection::AControlsB).max_abs_diff(testing::cnot_ab()), 0.0);
  EXPECT_EQ(nrcg_matrix(1, GateDirection::BControlsA).max_abs_diff(cnot_ba()), 0.0);
}

TEST(NrcgMatrix, SquareRootEntries) {
  const ComplexMatrix m = nrcg_matrix(2, GateDirection::AControlsB);
  EXPECT_NEAR(std::abs(m(2, 2) - Complex(0.5, 0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(2, 3) - Complex(0.5, -0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(3, 2) - Complex(0.5, -0.5)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(m(3, 3) - Complex(0.5, 0.5)), 0.0, 1e-15);
}

TEST(NrcgMatrix, MixingBlockIsUnitary) {
  for (int n : {1, 2, 3, 5, 15, 100}) {
    const ComplexMatrix m = nrcg_matrix(n, GateDirection::AControlsB);
    const Complex s = m(2, 2), p = m(2, 3);
    EXPECT_NEAR(std::norm(s) + std::norm(p), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(s * std::conj(p) + p * std::conj(s)), 0.0, 1e-15);
  }
}

TEST(NrcgMatrix, NthPowerIsCnot) {
  for (int n : {1, 2, 5, 15}) {
    EXPECT_LT(matrix_power(nrcg_matrix(n, GateDirection::AControlsB), n)
                  .max_abs_diff(testing::cnot_ab()),
              1e-10);
    EXPECT_LT(matrix_power(nrcg_matrix(n, GateDirection::BControlsA), n).max_abs_diff(cnot_ba()),
              1e-10);
  }
}

TEST(NrcgMatrix, RejectsNonPositiveRoot) {
  EXPECT_THROW(nrcg_matrix(0, GateDirection::AControlsB), InvalidArgument);
  EXPECT_THROW(nrcg_matrix(-3, GateDirection::BControlsA), InvalidArgument);
}

TEST(EmbedGate, TwoQubitEmbeddingMatchesBothLayouts) {
  EXPECT_TRUE(embed_gate({7, kQubitA, kQubitB}, 2).approx_equal(nrcg_matrix(7, GateDirection::AControlsB)));
  EXPECT_TRUE(embed_gate({7, kQubitB, kQubitA}, 2).approx_equal(nrcg_matrix(7, GateDirection::BControlsA)));
}

TEST(EmbedGate, CnotAbOnThreeQubits) {
  const auto out = apply(embed_gate({1, kQubitA, kQubitB}, 3), 0b100);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(out[i], Complex(i == 0b110 ? 1.0 : 0.0));
}

TEST(EmbedGate, CnotBcOnThreeQubits) {
  const auto out = apply(embed_gate({1, kQubitB, kQubitC}, 3), 0b010);
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(out[i], Complex(i == 0b011 ? 1.0 : 0.0));
}

TEST(EmbedGate, CnotAcSkipsMiddleQubit) {
  const ComplexMatrix u = embed_gate({1, kQubitA, kQubitC}, 3);
  const ComplexMatrix expect = kron(ComplexMatrix::diagonal({1, 0}), ComplexMatrix::identity(4)) +
                               kron(kron(ComplexMatrix::diagonal({0, 1}), ComplexMatrix::identity(2)),
                                    testing::pauli_x());
  EXPECT_TRUE(u.approx_equal(expect));
}

TEST(EmbedGate, EmbeddedGatesAreUnitary) {
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t t = 0; t < 3; ++t)
      if (c != t) EXPECT_TRUE(embed_gate({15, c, t}, 3).is_unitary(1e-12));
}

TEST(EmbedGate, RejectsCollisionsAndRange) {
  EXPECT_THROW(embed_gate({15, kQubitB, kQubitB}, 3), InvalidArgument);
  EXPECT_THROW(embed_gate({15, kQubitA, kQubitC}, 2), InvalidArgument);
}

TEST(Circuit, DefaultSequences) {
  EXPECT_EQ(circuit_for(spec(CaseId::Case1, 2)).size(), 1U);
  EXPECT_EQ(circuit_for(spec(CaseId::Case2, 2)).size(), 2U);
  EXPECT_EQ(circuit_for(spec(CaseId::Case1, 3)).size(), 2U);
  EXPECT_EQ(circuit_for(spec(CaseId::Case2, 3)).size(), 4U);
  for (CaseId c : {CaseId::Case1, CaseId::Case2}) {
    for (std::size_t n : {2U, 3U}) {
      for (const auto& g : circuit_for(spec(c, n))) EXPECT_TRUE(g.is_unitary(1e-12));
    }
  }
  for (const auto& l : default_gate_sequence(CaseId::Case1, 3)) EXPECT_NE(l.target, kQubitA);
  EXPECT_EQ(default_gate_sequence(CaseId::Case1, 2).front(), (GateLink{kQubitA, kQubitB}));
}

TEST(Circuit, IterationUnitaryComposesLeftToRight) {
  const ProtocolSpec s = spec(CaseId::Case2, 2, 3);
  const auto gates = circuit_for(s);
  EXPECT_TRUE(iteration_unitary(s).approx_equal(gates[1] * gates[0], 1e-14));
}

TEST(Circuit, CaseRulesAreEnforcedUnlessCustom) {
  ProtocolSpec s = spec(CaseId::Case1, 2);
  s.gate_sequence = {{kQubitB, kQubitA}};
  EXPECT_THROW(resolve_gates(s), InvalidArgument);
  s.allow_custom = true;
  EXPECT_NO_THROW(resolve_gates(s));

  ProtocolSpec c2 = spec(CaseId::Case2, 3);
  c2.gate_sequence = {{kQubitA, kQubitB}, {kQubitB, kQubitA}, {kQubitA, kQubitB}, {kQubitB, kQubitA}};
  EXPECT_THROW(resolve_gates(c2), InvalidArgument);  // C never used

  ProtocolSpec len = spec(CaseId::Case2, 2);
  len.gate_sequence = {{kQubitA, kQubitB}};
  EXPECT_THROW(resolve_gates(len), InvalidArgument);

  ProtocolSpec bad = spec(CaseId::Case1, 2);
  bad.allow_custom = true;
  bad.gate_sequence = {{kQubitA, kQubitA}};
  EXPECT_THROW(resolve_gates(bad), InvalidArgument);
  bad.gate_sequence = {{kQubitA, kQubitC}};
  EXPECT_THROW(resolve_gates(bad), InvalidArgument);
}

TEST(Circuit, OverrideHonoredVerbatim) {
  ProtocolSpec s = spec(CaseId::Case2, 3);
  s.gate_sequence = parse_gate_sequence("B>A, A>B, C>B, B>C");
  const auto gates = resolve_gates(s);
  ASSERT_EQ(gates.size(), 4U);
  EXPECT_EQ(gates[0].control, kQubitB);
  EXPECT_EQ(gates[0].target, kQubitA);
  EXPECT_EQ(gates[3].target, kQubitC);
}

TEST(GateSequenceText, RoundTripAndErrors) {
  const auto links = parse_gate_sequence("A>B,b>c");
  EXPECT_EQ(format_gate_sequence(links), "A>B,B>C");
  EXPECT_THROW(parse_gate_sequence("A-B"), ConfigError);
  EXPECT_THROW(parse_gate_sequence("A>D"), ConfigError);
  EXPECT_THROW(parse_gate_sequence(""), ConfigError);
  EXPECT_THROW(parse_gate_sequence("AB>C"), ConfigError);
}

TEST(RunTrace, ZeroIterationsKeepsOnlyInitialState) {
  std::mt19937_64 rng(1);
  const DensityMatrix rho = testing::random_state(2, rng);
  const StateTrace t = run_trace(rho, spec(CaseId::Case1, 2), 0);
  ASSERT_EQ(t.states.size(), 1U);
  EXPECT_TRUE(t.states[0].matrix().approx_equal(rho.matrix()));
}

TEST(RunTrace, OneCycleEqualsFullCnot) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = testing::random_state(2, rng);
    const StateTrace t = run_trace(rho, spec(CaseId::Case1, 2), 15);
    EXPECT_LT(t.states[15].matrix().max_abs_diff(evolve(rho, testing::cnot_ab()).matrix()), 1e-10);
  }
}

TEST(RunTrace, ControlQubitPopulationsAreConserved) {
  std::mt19937_64 rng(3);
  const DensityMatrix rho = testing::random_state(2, rng);
  const StateTrace t = run_trace(rho, spec(CaseId::Case1, 2), 60);
  const std::array<std::size_t, 1> keep_a{0};
  // Oracle: populations of A read straight off the joint diagonal.
  auto pop_a1 = [](const ComplexMatrix& m) { return m(2, 2).real() + m(3, 3).real(); };
  const double p0 = pop_a1(rho.matrix());
  for (const auto& s : t.states) {
    EXPECT_NEAR(pop_a1(s.matrix()), p0, 1e-12);
    EXPECT_NEAR(s.reduce(keep_a).matrix()(1, 1).real(), p0, 1e-12);
  }
}

TEST(RunTrace, StatesStayValidAndPurityIsConserved) {
  std::mt19937_64 rng(4);
  for (CaseId c : {CaseId::Case1, CaseId::Case2}) {
    for (std::size_t n : {2U, 3U}) {
      const DensityMatrix rho = testing::random_state(n, rng);
      const StateTrace t = run_trace(rho, spec(c, n), 40);
      for (const auto& s : t.states) {
        EXPECT_NO_THROW(validate_state(s.matrix()));
        EXPECT_NEAR(s.purity(), rho.purity(), 1e-12);
      }
    }
  }
}

TEST(RunTrace, RejectsMismatchedSizes) {
  std::mt19937_64 rng(5);
  EXPECT_THROW(run_trace(testing::random_state(2, rng), spec(CaseId::Case1, 3), 3), InvalidArgument);
  InitConfig init;
  init.n_qubits = 3;
  EXPECT_THROW(run_trace(init, QubitHamiltonian{}, spec(CaseId::Case1, 2), 3), InvalidArgument);
}

TEST(RunTrace, CaseOneControlQubitEnergyNeverChanges) {
  const QubitHamiltonian h;
  for (std::size_t n : {2U, 3U}) {
    InitConfig init{40.0, PureInit{0.85 * kPi, 0.3}, n};
    const auto records = delta_u(run_trace(init, h, spec(CaseId::Case1, n), 150), h);
    for (const auto& r : records) EXPECT_NEAR(r.du_per_qubit[kQubitA], 0.0, 1e-12);
  }
}

}  // namespace
}  // namespace nrcg
