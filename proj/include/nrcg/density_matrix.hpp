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

#ifndef NRCG_DENSITY_MATRIX_HPP
#define NRCG_DENSITY_MATRIX_HPP

#include <cstddef>
#include <span>

#include "nrcg/linalg.hpp"

namespace nrcg {

inline constexpr double kStateTol = 1e-10;

/// A validated qubit-register state: Hermitian, unit trace and positive
/// semidefinite (eigenvalues >= -1e-10), with dim == 2^n_qubits.
class DensityMatrix {
 public:
  /// Validates `mat`; throws InvalidArgument on any violated invariant.
  explicit DensityMatrix(ComplexMatrix mat);

  /// Skips the eigenvalue check. For states produced by operations that
  /// preserve validity by construction (unitary evolution, partial trace of
  /// a valid state); still checks trace and Hermiticity.
  static DensityMatrix trusted(ComplexMatrix mat);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

  double purity() const;

  /// Reduced state on the listed qubits (strictly increasing indices).
  DensityMatrix reduce(std::span<const std::size_t> keep) const;

 private:
  struct TrustedTag {};
  DensityMatrix(ComplexMatrix mat, TrustedTag);

  ComplexMatrix mat_;
  std::size_t n_qubits_;
};

/// Throws InvalidArgument unless the matrix is a valid state within
/// kStateTol (Hermitian, unit trace, eigenvalues >= -kStateTol).
void validate_state(const ComplexMatrix& mat);

/// Unitary evolution u * rho * u^dagger. Throws InvalidArgument if `u` is not
/// unitary within 1e-10 or the dimensions differ.
DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u);

}  // namespace nrcg

#endif  // NRCG_DENSITY_MATRIX_HPP
