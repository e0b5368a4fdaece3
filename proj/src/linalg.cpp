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

#include "nrcg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nrcg/errors.hpp"

namespace nrcg {

namespace {

constexpr double kJacobiThreshold = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* what) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()) + ")");
  }
}

double off_diagonal_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (i != j) sum += std::norm(m(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw InvalidArgument("ComplexMatrix: dimension must be >= 1");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> diag) {
  return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  ComplexMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw InvalidArgument("ComplexMatrix::from_rows: matrix is not square");
    }
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(*this);
  for (auto& v : out.data_) v = std::conj(v);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  require_same_dim(*this, other, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
  }
  return worst;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  return dim_ == other.dim_ && max_abs_diff(other) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  return (adjoint() * *this).approx_equal(identity(dim_), tol);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) noexcept {
  for (auto& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) {
          out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned power) {
  ComplexMatrix result = ComplexMatrix::identity(m.dim());
  ComplexMatrix base = m;
  while (power > 0) {
    if (power & 1U) result = result * base;
    power >>= 1U;
    if (power > 0) base = base * base;
  }
  return result;
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& m) {
  require_same_dim(u, m, "conjugate_by");
  const std::size_t n = m.dim();
  // tmp = u * m, out = tmp * u^dagger
  ComplexMatrix tmp = u * m;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += tmp(i, k) * std::conj(u(j, k));
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const std::size_t n_sub = dims.size();
  if (n_sub == 0) throw InvalidArgument("partial_trace: no subsystems given");
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw InvalidArgument("partial_trace: zero local dimension");
    total *= d;
  }
  if (total != rho.dim()) {
    throw InvalidArgument("partial_trace: subsystem dimensions multiply to " +
                          std::to_string(total) + ", matrix has dim " +
                          std::to_string(rho.dim()));
  }
  if (keep.empty()) throw InvalidArgument("partial_trace: keep set is empty");
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= n_sub) {
      throw InvalidArgument("partial_trace: subsystem index out of range");
    }
    if (k > 0 && keep[k] <= keep[k - 1]) {
      throw InvalidArgument(
          "partial_trace: keep indices must be strictly increasing");
    }
  }

  std::vector<bool> kept(n_sub, false);
  for (std::size_t k : keep) kept[k] = true;

  // Strides of each subsystem in the full index.
  std::vector<std::size_t> stride(n_sub);
  std::size_t s = 1;
  for (std::size_t q = n_sub; q-- > 0;) {
    stride[q] = s;
    s *= dims[q];
  }

  std::size_t kept_dim = 1;
  std::size_t traced_dim = 1;
  for (std::size_t q = 0; q < n_sub; ++q) (kept[q] ? kept_dim : traced_dim) *= dims[q];

  // Map a (kept index, traced index) pair back to the full basis index.
  auto compose = [&](std::size_t kept_idx, std::size_t traced_idx) {
    std::size_t full = 0;
    for (std::size_t q = n_sub; q-- > 0;) {
      if (kept[q]) {
        full += (kept_idx % dims[q]) * stride[q];
        kept_idx /= dims[q];
      } else {
        full += (traced_idx % dims[q]) * stride[q];
        traced_idx /= dims[q];
      }
    }
    return full;
  };

  std::vector<std::size_t> index(kept_dim * traced_dim);
  for (std::size_t a = 0; a < kept_dim; ++a) {
    for (std::size_t t = 0; t < traced_dim; ++t) index[a * traced_dim + t] = compose(a, t);
  }

  ComplexMatrix out(kept_dim);
  for (std::size_t a = 0; a < kept_dim; ++a) {
    for (std::size_t b = 0; b < kept_dim; ++b) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) {
        acc += rho(index[a * traced_dim + t], index[b * traced_dim + t]);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_trace_qubits(const ComplexMatrix& rho,
                                   std::size_t n_qubits,
                                   std::span<const std::size_t> keep) {
  const std::vector<std::size_t> dims(n_qubits, 2);
  return partial_trace(rho, dims, keep);
}

EigenSystem hermitian_eigen(const ComplexMatrix& m) {
  if (!m.is_hermitian(1e-10)) {
    throw InvalidArgument("hermitian_eigen: matrix is not Hermitian");
  }
  const std::size_t n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  double scale = 0.0;
  for (const auto& x : a.data()) scale += std::norm(x);
  const double threshold = kJacobiThreshold * std::max(1.0, std::sqrt(scale));

  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweep > kJacobiMaxSweeps) {
      throw NumericalError("hermitian_eigen: Jacobi iteration did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const Complex phase = apq / g;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Rotation U acting on the (p, q) plane; U^dagger A U zeroes A(p, q).
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigen(m).values;
}

}  // namespace nrcg
