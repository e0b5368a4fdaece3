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

#include <algorithm>
#include <cmath>

#include "nrcg/errors.hpp"
#include "nrcg/protocol.hpp"
#include "nrcg/thermo.hpp"

namespace nrcg {
namespace {

const QubitHamiltonian kH{};

std::vector<EnergyRecord> records(CaseId c, std::size_t n, double theta, double phi,
                                  const QubitHamiltonian& h = kH) {
  ProtocolSpec s;
  s.case_id = c;
  s.n_qubits = n;
  InitConfig init{40.0, PureInit{theta, phi}, n};
  return delta_u(run_trace(init, h, s, default_iterations(n)), h);
}

EnergyRecord synthetic(double du_a, double du_b, std::optional<double> du_c = std::nullopt) {
  EnergyRecord r;
  r.du_per_qubit = {du_a, du_b};
  if (du_c) r.du_per_qubit.push_back(*du_c);
  for (double d : r.du_per_qubit) r.du_sys += d;
  r.work = -r.du_sys;
  return r;
}

TEST(InternalEnergy, Examples) {
  const ComplexMatrix h = kH.matrix();
  EXPECT_DOUBLE_EQ(internal_energy(DensityMatrix(ComplexMatrix::diagonal({1, 0})), h), 0.0);
  EXPECT_DOUBLE_EQ(internal_energy(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.5})), h), 0.5);
  for (double theta : {0.1, 1.0, 2.0, 3.0}) {
    for (double phi : {0.0, 2.5, 6.0}) {
      EXPECT_NEAR(internal_energy(pure_state(theta, phi), h), std::pow(std::sin(theta / 2), 2), 1e-15);
    }
  }
}

TEST(InternalEnergy, DimensionMismatchThrows) {
  EXPECT_THROW(internal_energy(pure_state(1.0, 0.0), ComplexMatrix::identity(4)), InvalidArgument);
}

TEST(DeltaU, IterationZeroIsAllZero) {
  const auto recs = records(CaseId::Case2, 3, 0.79 * kPi, 0.08 * kPi);
  const EnergyRecord& r = recs.front();
  EXPECT_EQ(r.iteration, 0U);
  EXPECT_EQ(r.du_sys, 0.0);
  EXPECT_EQ(r.work, 0.0);
  for (double d : r.du_per_qubit) EXPECT_EQ(d, 0.0);
  EXPECT_EQ(r.regime, Regime::Other);
}

TEST(DeltaU, DefinitionalIdentitiesAndAdditivity) {
  for (CaseId c : {CaseId::Case1, CaseId::Case2}) {
    for (std::size_t n : {2U, 3U}) {
      for (const auto& r : records(c, n, 0.8 * kPi, 0.2 * kPi)) {
        EXPECT_EQ(r.work, -r.du_sys);
        double sum_du = 0.0, sum_u = 0.0;
        for (double d : r.du_per_qubit) sum_du += d;
        for (double u : r.u_per_qubit) sum_u += u;
        EXPECT_NEAR(r.du_sys, sum_du, 1e-12);
        EXPECT_NEAR(r.u_sys, sum_u, 1e-10);
        EXPECT_EQ(r.efficiency.has_value(), r.regime == Regime::HeatEngine);
      }
    }
  }
}

TEST(DeltaU, CaseOneTwoQubitControlEnergyFixed) {
  for (const auto& r : records(CaseId::Case1, 2, kPi, 0.17 * kPi)) {
    EXPECT_NEAR(r.du_per_qubit[kQubitA], 0.0, 1e-12);
  }
}

TEST(ClassifyRegime, Examples) {
  EXPECT_EQ(classify_regime(synthetic(0.0, 0.0), kQubitB), Regime::Other);
  EXPECT_EQ(classify_regime(synthetic(0.1, -0.3), kQubitB), Regime::HeatEngine);
  EXPECT_EQ(classify_regime(synthetic(0.1, -0.3, -0.01), kQubitB), Regime::Other);
  EXPECT_EQ(classify_regime(synthetic(0.1, -0.3, 0.05), kQubitB), Regime::HeatEngine);
  EXPECT_EQ(classify_regime(synthetic(0.3, -0.1), kQubitB), Regime::Other);  // system gains energy
  EXPECT_EQ(classify_regime(synthetic(-5e-13, -0.3), kQubitB), Regime::HeatEngine);
  EXPECT_EQ(classify_regime(synthetic(-1e-11, -0.3), kQubitB), Regime::Other);
  // Mirrored conditions are not defined.
  EXPECT_EQ(classify_regime(synthetic(-0.3, 0.1), kQubitA), Regime::Other);
  EXPECT_EQ(classify_regime(synthetic(0.1, -0.3), std::nullopt), Regime::Other);
}

TEST(ClassifyRegime, CaseTwoThreeQubitHasWorkOutsideRegime) {
  const auto recs = records(CaseId::Case2, 3, 0.79 * kPi, 0.08 * kPi);
  const bool found = std::any_of(recs.begin(), recs.end(), [](const EnergyRecord& r) {
    return r.work > 1e-3 && r.regime == Regime::Other;
  });
  EXPECT_TRUE(found);
}

TEST(ClassifyRegime, InvariantUnderCommonEnergyShift) {
  const auto a = records(CaseId::Case2, 3, 0.8 * kPi, 0.3 * kPi, QubitHamiltonian{0.0, 1.0});
  const auto b = records(CaseId::Case2, 3, 0.8 * kPi, 0.3 * kPi, QubitHamiltonian{0.7, 1.7});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].regime, b[k].regime) << "iteration " << k;
    EXPECT_NEAR(a[k].work, b[k].work, 1e-12);
  }
}

TEST(Efficiency, SyntheticArithmetic) {
  EnergyRecord r = synthetic(0.2, -0.4);
  r.regime = Regime::HeatEngine;
  EXPECT_DOUBLE_EQ(efficiency(r, kQubitB), 0.5);
}

TEST(Efficiency, ErrorsOutsideRegimeAndForZeroHeat) {
  EnergyRecord r = synthetic(0.2, -0.4);
  EXPECT_THROW(efficiency(r, kQubitB), StateError);
  EnergyRecord z = synthetic(-0.1, 0.0);
  z.regime = Regime::HeatEngine;
  EXPECT_THROW(efficiency(z, kQubitB), UndefinedValue);
}

TEST(Efficiency, BoundedInsideRegime) {
  for (CaseId c : {CaseId::Case1, CaseId::Case2}) {
    for (std::size_t n : {2U, 3U}) {
      for (const auto& r : records(c, n, 0.85 * kPi, 0.1 * kPi)) {
        if (!r.efficiency) continue;
        EXPECT_GE(*r.efficiency, -1e-12);
        EXPECT_LE(*r.efficiency, 1.0 + 1e-12);
      }
    }
  }
}

TEST(Efficiency, CaseOneTwoQubitIsExactlyOne) {
  for (const auto& r : records(CaseId::Case1, 2, kPi, 0.17 * kPi)) {
    if (r.efficiency) EXPECT_NEAR(*r.efficiency, 1.0, 1e-10);
  }
}

TEST(HotQubit, StrictMaximumOrNothing) {
  EXPECT_EQ(hot_qubit({0.1, 0.9, 0.1}), std::optional<std::size_t>(1));
  EXPECT_EQ(hot_qubit({0.5, 0.5}), std::nullopt);
  EXPECT_EQ(hot_qubit({0.7, 0.2}), std::optional<std::size_t>(0));
  EXPECT_EQ(hot_qubit({}), std::nullopt);
}

TEST(HotQubit, TieAtEqualEnergySuppressesEfficiency) {
  // Populations of B equal those of the Gibbs qubits: no hot component.
  const double p = std::exp(-1.0 / 40.0) / (1.0 + std::exp(-1.0 / 40.0));
  const double theta = 2.0 * std::asin(std::sqrt(p));
  for (const auto& r : records(CaseId::Case1, 2, theta, 0.0)) EXPECT_FALSE(r.efficiency.has_value());
}

}  // namespace
}  // namespace nrcg
