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

#ifndef NRCG_LINALG_HPP
#define NRCG_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace nrcg {

using Complex = std::complex<double>;

inline constexpr double kDefaultMatrixTol = 1e-12;

/// Dense row-major complex square matrix.
///
/// Sized for the handful of qubits this project deals with (dim <= 8), so
/// everything is a plain value type; no expression templates, no views.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension. Throws InvalidArgument for dim 0.
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> diag);
  static ComplexMatrix diagonal(std::initializer_list<double> diag);
  /// Builds from nested rows; all rows must have the same length as the
  /// number of rows.
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  Complex trace() const noexcept;

  /// Largest entrywise modulus of (*this - other). Dimensions must match.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool approx_equal(const ComplexMatrix& other,
                    double tol = kDefaultMatrixTol) const;

  bool is_hermitian(double tol = 1e-10) const noexcept;
  bool is_unitary(double tol = 1e-10) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scalar) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) {
    return lhs *= scalar;
  }
  friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) {
    return rhs *= scalar;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// Kronecker product; `a` is the more significant factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Integer power by repeated squaring. power 0 gives the identity.
ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned power);

/// u * m * u^dagger without validation.
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m);

/// Reduced matrix over the subsystems listed in `keep`.
///
/// `dims` lists the local dimension of every subsystem, most significant
/// first. `keep` must be non-empty, strictly increasing and in range; the
/// result keeps the subsystems in that order.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Convenience overload for registers of qubits.
ComplexMatrix partial_trace_qubits(const ComplexMatrix& rho,
                                   std::size_t n_qubits,
                                   std::span<const std::size_t> keep);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// Throws InvalidArgument when `m` is not Hermitian within 1e-10 and
/// NumericalError when the sweep cap is reached.
EigenSystem hermitian_eigen(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace nrcg

#endif  // NRCG_LINALG_HPP
