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

#include "nrcg/density_matrix.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "nrcg/errors.hpp"

namespace nrcg {

namespace {

std::size_t qubit_count(std::size_t dim) {
  if (!std::has_single_bit(dim)) {
    throw InvalidArgument("DensityMatrix: dimension " + std::to_string(dim) +
                          " is not a power of two");
  }
  return static_cast<std::size_t>(std::countr_zero(dim));
}

void check_trace_and_hermiticity(const ComplexMatrix& mat) {
  if (!mat.is_hermitian(kStateTol)) {
    throw InvalidArgument("DensityMatrix: matrix is not Hermitian");
  }
  const Complex tr = mat.trace();
  if (std::abs(tr - 1.0) > kStateTol) {
    throw InvalidArgument("DensityMatrix: trace is " + std::to_string(tr.real()) +
                          ", expected 1");
  }
}

}  // namespace

void validate_state(const ComplexMatrix& mat) {
  check_trace_and_hermiticity(mat);
  const auto eig = hermitian_eigenvalues(mat);
  if (eig.front() < -kStateTol) {
    throw InvalidArgument("DensityMatrix: negative eigenvalue " +
                          std::to_string(eig.front()));
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat)
    : mat_(std::move(mat)), n_qubits_(qubit_count(mat_.dim())) {
  validate_state(mat_);
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, TrustedTag)
    : mat_(std::move(mat)), n_qubits_(qubit_count(mat_.dim())) {
  check_trace_and_hermiticity(mat_);
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix mat) {
  return DensityMatrix(std::move(mat), TrustedTag{});
}

double DensityMatrix::purity() const {
  return (mat_ * mat_).trace().real();
}

DensityMatrix DensityMatrix::reduce(std::span<const std::size_t> keep) const {
  return trusted(partial_trace_qubits(mat_, n_qubits_, keep));
}

DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.dim() != rho.dim()) {
    throw InvalidArgument("evolve: unitary has dim " + std::to_string(u.dim()) +
                          ", state has dim " + std::to_string(rho.dim()));
  }
  if (!u.is_unitary(1e-10)) throw InvalidArgument("evolve: matrix is not unitary");
  return DensityMatrix::trusted(conjugate_by(u, rho.matrix()));
}

}  // namespace nrcg
