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

#ifndef NRCG_CORRELATIONS_HPP
#define NRCG_CORRELATIONS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nrcg/density_matrix.hpp"
#include "nrcg/linalg.hpp"
#include "nrcg/model.hpp"

// Entropies, mutual information, discord and classical correlations are in
// nats. Entanglement of formation is in bits.
namespace nrcg {

/// Ordered split (X:Y) of the register. Measurements act on Y.
struct Bipartition {
  std::vector<std::size_t> part_x;
  std::vector<std::size_t> part_y;

  /// Throws InvalidArgument unless X and Y are disjoint, nonempty and cover
  /// qubits 0..n_qubits-1.
  void validate(std::size_t n_qubits) const;
  Bipartition swapped() const { return {part_y, part_x}; }
  std::string label() const;  // e.g. "AC:B"
};

/// "AC:B" -> {{0, 2}, {1}}. Throws ConfigError on malformed text.
Bipartition parse_bipartition(std::string_view text);

/// Projective basis on one or two qubits. Per qubit
///   |u> = (cos(t/2), e^{i p} sin(t/2)),  |v> = (e^{-i p} sin(t/2), -cos(t/2)).
/// Two-qubit bases are the products uu', uv', vu', vv'.
struct MeasurementBasis {
  std::vector<double> angles;  // (theta, phi) or (theta, phi, theta', phi')

  std::size_t n_qubits() const noexcept { return angles.size() / 2; }
  /// One column vector per outcome, in the order listed above.
  std::vector<std::vector<Complex>> outcome_vectors() const;
};

/// Entropy of a spectrum with the clamping rule: values in [-1e-8, 0) count
/// as 0, anything below raises NumericalError.
double entropy_from_eigenvalues(std::span<const double> eigenvalues);

double von_neumann_entropy(const DensityMatrix& rho);
double von_neumann_entropy(const ComplexMatrix& rho);

double mutual_information(const DensityMatrix& rho, const Bipartition& bp);

/// Sum_j p_j S(rho_X | outcome j) for a measurement on bp.part_y.
/// Throws NumericalError if the outcome probabilities do not sum to 1.
double conditional_entropy(const DensityMatrix& rho, const Bipartition& bp,
                           const MeasurementBasis& basis);

struct DiscordSearch {
  double grid_step_1q = kPi / 16.0;
  double grid_step_2q = kPi / 8.0;
  /// Coordinate descent halves its step until it falls below this.
  double min_step = 1e-4;
  bool refine = true;
};

struct DiscordResult {
  double discord = 0.0;      // clamped at 0
  double raw = 0.0;          // before clamping
  double clamped_by = 0.0;   // max(0, -raw)
  double mutual_info = 0.0;
  double min_conditional_entropy = 0.0;
  MeasurementBasis basis;
  std::size_t evaluations = 0;
};

/// D(X:Y) minimized over projective measurements on Y (1 or 2 qubits):
/// a uniform angle grid followed by coordinate descent from its best point.
DiscordResult quantum_discord_detailed(const DensityMatrix& rho, const Bipartition& bp,
                                       const DiscordSearch& search = {});
double quantum_discord(const DensityMatrix& rho, const Bipartition& bp,
                       const DiscordSearch& search = {});

/// MI - D, clamped at 0.
double classical_correlations(const DensityMatrix& rho, const Bipartition& bp,
                              const DiscordSearch& search = {});

struct EntanglementMeasures {
  double concurrence = 0.0;
  double eof = 0.0;  // bits
};

/// Two-qubit concurrence and entanglement of formation.
EntanglementMeasures concurrence_eof(const DensityMatrix& rho);
/// Same, on the two-qubit marginal (q1, q2) of a larger register.
EntanglementMeasures concurrence_eof(const DensityMatrix& rho, std::size_t q1,
                                     std::size_t q2);

/// Pearson correlation coefficient. Throws InvalidArgument for mismatched
/// or too-short input and UndefinedValue when either series is constant.
double pearson(std::span<const double> x, std::span<const double> y);

/// A series counts as constant when max - min is at most this.
inline constexpr double kConstantSeriesTol = 1e-12;

}  // namespace nrcg

#endif  // NRCG_CORRELATIONS_HPP
