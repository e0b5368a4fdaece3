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
#include <array>
#include <complex>
#include <random>
#include <vector>

#include "nrcg/density_matrix.hpp"
#include "nrcg/errors.hpp"
#include "nrcg/linalg.hpp"
#include "test_util.hpp"

namespace nrcg {
namespace {

using testing::random_hermitian;
using testing::random_state;

// Characteristic polynomial by Faddeev-LeVerrier, then Durand-Kerner roots.
// Shares no code with the Jacobi solver.
std::vector<double> charpoly_roots(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> c(n + 1);  // det(x I - A) = sum c[k] x^(n-k)
  c[0] = 1.0;
  ComplexMatrix m(n);
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[k - 1];
    m = next;
    c[k] = -(a * m).trace() / static_cast<double>(k);
  }
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(Complex(0.4, 0.9), static_cast<double>(i));
  auto p = [&](Complex x) {
    Complex acc = 0.0;
    for (const Complex& ck : c) acc = acc * x + ck;
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      Complex den = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      z[i] -= p(z[i]) / den;
    }
  }
  std::vector<double> out;
  for (const Complex& r : z) out.push_back(r.real());
  std::sort(out.begin(), out.end());
  return out;
}

// Reduced matrix by explicit summation over the traced indices.
ComplexMatrix trace_out_middle(const ComplexMatrix& rho) {
  ComplexMatrix out(4);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t ap = 0; ap < 2; ++ap)
        for (std::size_t cp = 0; cp < 2; ++cp)
          for (std::size_t b = 0; b < 2; ++b)
            out(a * 2 + c, ap * 2 + cp) += rho(a * 4 + b * 2 + c, ap * 4 + b * 2 + cp);
  return out;
}

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_TRUE(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2))
                  .approx_equal(ComplexMatrix::identity(4)));
}

TEST(Kron, DiagonalTimesIdentity) {
  EXPECT_TRUE(kron(ComplexMatrix::diagonal({0, 1}), ComplexMatrix::identity(2))
                  .approx_equal(ComplexMatrix::diagonal({0, 0, 1, 1})));
}

TEST(Kron, PauliXTimesPauliZHandExpanded) {
  const ComplexMatrix expect = ComplexMatrix::from_rows(
      {{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  EXPECT_TRUE(kron(testing::pauli_x(), testing::pauli_z()).approx_equal(expect));
}

TEST(Kron, IsAssociative) {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = testing::random_matrix(2, rng);
  const ComplexMatrix b = testing::random_matrix(2, rng);
  const ComplexMatrix c = testing::random_matrix(2, rng);
  EXPECT_TRUE(kron(kron(a, b), c).approx_equal(kron(a, kron(b, c)), 1e-12));
}

TEST(ComplexMatrixTest, ZeroDimensionThrows) {
  EXPECT_THROW(ComplexMatrix(0), InvalidArgument);
}

TEST(ComplexMatrixTest, MatrixPowerMatchesRepeatedProduct) {
  std::mt19937_64 rng(5);
  const ComplexMatrix m = testing::random_matrix(4, rng) * Complex(0.3);
  ComplexMatrix slow = ComplexMatrix::identity(4);
  for (int k = 0; k < 7; ++k) slow = slow * m;
  EXPECT_TRUE(matrix_power(m, 7).approx_equal(slow, 1e-10));
  EXPECT_TRUE(matrix_power(m, 0).approx_equal(ComplexMatrix::identity(4)));
}

TEST(PartialTrace, ProductStateFactorizes) {
  std::mt19937_64 rng(1);
  const DensityMatrix a = random_state(1, rng);
  const DensityMatrix b = random_state(1, rng);
  const std::array<std::size_t, 2> dims{2, 2};
  const std::array<std::size_t, 1> keep_a{0};
  const std::array<std::size_t, 1> keep_b{1};
  const ComplexMatrix ab = kron(a.matrix(), b.matrix());
  EXPECT_TRUE(partial_trace(ab, dims, keep_a).approx_equal(a.matrix(), 1e-12));
  EXPECT_TRUE(partial_trace(ab, dims, keep_b).approx_equal(b.matrix(), 1e-12));
}

TEST(PartialTrace, BellStateReducesToMaximallyMixed) {
  const std::array<std::size_t, 1> keep{1};
  EXPECT_TRUE(partial_trace_qubits(testing::bell_state().matrix(), 2, keep)
                  .approx_equal(ComplexMatrix::diagonal({0.5, 0.5}), 1e-12));
}

TEST(PartialTrace, KeepOuterQubitsMatchesSummationOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_state(3, rng);
    const std::array<std::size_t, 2> keep{0, 2};
    const ComplexMatrix got = partial_trace_qubits(rho.matrix(), 3, keep);
    EXPECT_TRUE(got.approx_equal(trace_out_middle(rho.matrix()), 1e-12));
    EXPECT_NEAR(got.trace().real(), 1.0, 1e-12);
    EXPECT_TRUE(got.is_hermitian(1e-12));
  }
}

TEST(PartialTrace, RejectsBadArguments) {
  const ComplexMatrix rho = ComplexMatrix::identity(4) * Complex(0.25);
  const std::array<std::size_t, 0> none{};
  const std::array<std::size_t, 1> out_of_range{2};
  const std::array<std::size_t, 2> unsorted{1, 0};
  EXPECT_THROW(partial_trace_qubits(rho, 2, none), InvalidArgument);
  EXPECT_THROW(partial_trace_qubits(rho, 2, out_of_range), InvalidArgument);
  EXPECT_THROW(partial_trace_qubits(rho, 2, unsorted), InvalidArgument);
  EXPECT_THROW(partial_trace_qubits(rho, 3, std::array<std::size_t, 1>{0}), InvalidArgument);
}

TEST(PartialTrace, EveryReductionOfRandomStatesIsAState) {
  std::mt19937_64 rng(3);
  const std::vector<std::vector<std::size_t>> keeps = {{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}};
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_state(3, rng);
    for (const auto& keep : keeps) {
      EXPECT_NO_THROW(validate_state(partial_trace_qubits(rho.matrix(), 3, keep)));
    }
  }
}

TEST(Eigen, Identity) {
  const auto ev = hermitian_eigenvalues(ComplexMatrix::identity(4));
  for (double v : ev) EXPECT_NEAR(v, 1.0, 1e-14);
}

TEST(Eigen, DiagonalAscending) {
  const auto ev = hermitian_eigenvalues(ComplexMatrix::diagonal({0.8, 0.2}));
  ASSERT_EQ(ev.size(), 2U);
  EXPECT_NEAR(ev[0], 0.2, 1e-14);
  EXPECT_NEAR(ev[1], 0.8, 1e-14);
}

TEST(Eigen, RandomHermitianMatchesCharacteristicPolynomial) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix m = random_hermitian(4, rng);
    const auto ev = hermitian_eigenvalues(m);
    const auto oracle = charpoly_roots(m);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(ev[k], oracle[k], 1e-8);
  }
}

TEST(Eigen, ReconstructionResidual) {
  std::mt19937_64 rng(6);
  for (std::size_t dim : {2U, 4U, 8U}) {
    const ComplexMatrix m = random_hermitian(dim, rng);
    const EigenSystem es = hermitian_eigen(m);
    ComplexMatrix rebuilt =
        es.vectors * ComplexMatrix::diagonal(es.values) * es.vectors.adjoint();
    EXPECT_LT(rebuilt.max_abs_diff(m), 1e-10) << "dim " << dim;
    EXPECT_TRUE(es.vectors.is_unitary(1e-10));
    EXPECT_TRUE(std::is_sorted(es.values.begin(), es.values.end()));
  }
}

TEST(Eigen, DegenerateSpectrum) {
  // Repeated eigenvalues and an already-diagonal block.
  const ComplexMatrix m = kron(ComplexMatrix::identity(2), testing::pauli_x());
  const auto ev = hermitian_eigenvalues(m);
  EXPECT_NEAR(ev[0], -1.0, 1e-14);
  EXPECT_NEAR(ev[1], -1.0, 1e-14);
  EXPECT_NEAR(ev[2], 1.0, 1e-14);
  EXPECT_NEAR(ev[3], 1.0, 1e-14);
}

TEST(Eigen, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigenvalues(m), InvalidArgument);
}

TEST(Eigen, StateSpectrumIsProbabilityVector) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto ev = hermitian_eigenvalues(random_state(3, rng).matrix());
    double sum = 0.0;
    for (double v : ev) {
      EXPECT_GE(v, -1e-10);
      EXPECT_LE(v, 1.0 + 1e-10);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
  }
}

TEST(Evolve, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(8);
  const DensityMatrix rho = random_state(2, rng);
  EXPECT_TRUE(evolve(rho, ComplexMatrix::identity(4)).matrix().approx_equal(rho.matrix()));
}

TEST(Evolve, CnotWithControlOffIsIdentity) {
  std::mt19937_64 rng(9);
  const DensityMatrix b = random_state(1, rng);
  const DensityMatrix rho(kron(ComplexMatrix::diagonal({1, 0}), b.matrix()));
  EXPECT_TRUE(evolve(rho, testing::cnot_ab()).matrix().approx_equal(rho.matrix(), 1e-12));
}

TEST(Evolve, CnotFlipsTargetWhenControlIsOn) {
  const DensityMatrix rho(testing::basis_projector(4, 2));  // |10><10|
  EXPECT_TRUE(evolve(rho, testing::cnot_ab()).matrix().approx_equal(testing::basis_projector(4, 3)));
}

TEST(Evolve, RejectsNonUnitaryAndDimensionMismatch) {
  const DensityMatrix rho(ComplexMatrix::identity(4) * Complex(0.25));
  EXPECT_THROW(evolve(rho, ComplexMatrix::identity(4) * Complex(2.0)), InvalidArgument);
  EXPECT_THROW(evolve(rho, ComplexMatrix::identity(2)), InvalidArgument);
}

TEST(Evolve, PreservesPurityTraceAndPositivity) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = random_state(3, rng);
    // Unitary from the eigenvectors of a random Hermitian matrix.
    const ComplexMatrix u = hermitian_eigen(random_hermitian(8, rng)).vectors;
    const DensityMatrix out = evolve(rho, u);
    EXPECT_NEAR(out.purity(), rho.purity(), 1e-12);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_GE(hermitian_eigenvalues(out.matrix()).front(), -1e-12);
  }
}

TEST(DensityMatrixTest, ValidationRejectsInvalidStates) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.6})), InvalidArgument);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({1.2, -0.2})), InvalidArgument);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.25, 0.25})), InvalidArgument);
  ComplexMatrix skew = ComplexMatrix::diagonal({0.5, 0.5});
  skew(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix{skew}, InvalidArgument);
}

}  // namespace
}  // namespace nrcg
