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

#include "nrcg/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "nrcg/errors.hpp"

namespace nrcg {

namespace {

constexpr double kNegativeEigenvalueLimit = 1e-8;
constexpr double kMinOutcomeProbability = 1e-14;
constexpr double kProbabilitySumTol = 1e-10;

using Vec4 = std::array<Complex, 4>;

void single_qubit_pair(double theta, double phi, Vec4& u, Vec4& v) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e = std::polar(1.0, phi);
  u = {Complex(c), s * e, 0.0, 0.0};
  v = {s * std::conj(e), Complex(-c), 0.0, 0.0};
}

// Fills up to four outcome vectors; returns how many.
std::size_t fill_outcomes(const double* angles, std::size_t n_measured,
                          std::array<Vec4, 4>& out) {
  Vec4 u, v;
  single_qubit_pair(angles[0], angles[1], u, v);
  if (n_measured == 1) {
    out[0] = u;
    out[1] = v;
    return 2;
  }
  Vec4 u2, v2;
  single_qubit_pair(angles[2], angles[3], u2, v2);
  const std::array<const Vec4*, 2> first{&u, &v};
  const std::array<const Vec4*, 2> second{&u2, &v2};
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      Vec4& w = out[2 * a + b];
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) w[2 * i + j] = (*first[a])[i] * (*second[b])[j];
      }
    }
  }
  return 4;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Reorders the register so that the qubits listed in 'order' come first to last.
ComplexMatrix permute_qubits(const ComplexMatrix& rho, std::size_t n,
                             const std::vector<std::size_t>& order) {
  const std::size_t dim = rho.dim();
  std::vector<std::size_t> map(dim);
  for (std::size_t ni = 0; ni < dim; ++ni) {
    std::size_t oi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bit = (ni >> (n - 1 - i)) & 1U;
      oi |= bit << (n - 1 - order[i]);
    }
    map[ni] = oi;
  }
  ComplexMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = rho(map[r], map[c]);
  }
  return out;
}

// Sum_j p_j S(rho_X|j) as a function of the measurement angles.
class ConditionalEntropy {
 public:
  ConditionalEntropy(const DensityMatrix& rho, const Bipartition& bp)
      : n_measured_(bp.part_y.size()),
        dx_(std::size_t{1} << bp.part_x.size()),
        dy_(std::size_t{1} << bp.part_y.size()) {
    bp.validate(rho.n_qubits());
    if (n_measured_ > 2) {
      throw InvalidArgument("measurements on more than two qubits are not supported");
    }
    std::vector<std::size_t> order = bp.part_x;
    order.insert(order.end(), bp.part_y.begin(), bp.part_y.end());
    r_ = permute_qubits(rho.matrix(), rho.n_qubits(), order);
  }

  std::size_t n_measured() const noexcept { return n_measured_; }

  double operator()(const double* angles) const {
    std::array<Vec4, 4> w;
    const std::size_t n_out = fill_outcomes(angles, n_measured_, w);
    double total = 0.0;
    double p_sum = 0.0;
    ComplexMatrix sigma(dx_);
    for (std::size_t j = 0; j < n_out; ++j) {
      // sigma = (I (x) <w|) rho (I (x) |w>)
      for (std::size_t x = 0; x < dx_; ++x) {
        for (std::size_t xp = x; xp < dx_; ++xp) {
          Complex acc = 0.0;
          for (std::size_t y = 0; y < dy_; ++y) {
            Complex inner = 0.0;
            for (std::size_t yp = 0; yp < dy_; ++yp) {
              inner += r_(x * dy_ + y, xp * dy_ + yp) * w[j][yp];
            }
            acc += std::conj(w[j][y]) * inner;
          }
          sigma(x, xp) = acc;
          sigma(xp, x) = std::conj(acc);
        }
      }
      double p = 0.0;
      for (std::size_t x = 0; x < dx_; ++x) {
        sigma(x, x) = sigma(x, x).real();
        p += sigma(x, x).real();
      }
      p_sum += p;
      if (p < kMinOutcomeProbability) continue;
      // p S(sigma / p) = H(spec sigma) + p ln p, with H unnormalized.
      total += entropy_from_eigenvalues(spectrum(sigma)) + p * std::log(p);
    }
    if (std::abs(p_sum - 1.0) > kProbabilitySumTol) {
      throw NumericalError("conditional_entropy: outcome probabilities sum to " +
                           std::to_string(p_sum));
    }
    return total;
  }

 private:
  static std::vector<double> spectrum(const ComplexMatrix& m) {
    if (m.dim() == 2) {
      const double a = m(0, 0).real();
      const double d = m(1, 1).real();
      const double half = 0.5 * (a + d);
      const double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
      return {half - r, half + r};
    }
    return hermitian_eigenvalues(m);
  }

  std::size_t n_measured_;
  std::size_t dx_;
  std::size_t dy_;
  ComplexMatrix r_{1};
};

double wrap(double angle, double period) {
  double a = std::fmod(angle, period);
  if (a < 0.0) a += period;
  return a;
}

// Maps arbitrary angles onto theta in [0, pi], phi in [0, 2 pi) describing
// the same projectors.
void normalize_angles(std::vector<double>& angles) {
  for (std::size_t k = 0; k + 1 < angles.size(); k += 2) {
    double theta = wrap(angles[k], 2.0 * kPi);
    double phi = angles[k + 1];
    if (theta > kPi) {
      theta = 2.0 * kPi - theta;
      phi += kPi;
    }
    angles[k] = theta;
    angles[k + 1] = wrap(phi, 2.0 * kPi);
  }
}

std::vector<double> axis(double stop, double step) {
  const auto count = static_cast<std::size_t>(std::floor(stop / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = std::min(stop, k * step);
  return out;
}

double binary_entropy_bits(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

}  // namespace

void Bipartition::validate(std::size_t n_qubits) const {
  if (part_x.empty() || part_y.empty()) {
    throw InvalidArgument("Bipartition: both parts must be nonempty");
  }
  std::vector<bool> seen(n_qubits, false);
  for (const auto* part : {&part_x, &part_y}) {
    for (std::size_t q : *part) {
      if (q >= n_qubits) throw InvalidArgument("Bipartition: qubit index out of range");
      if (seen[q]) throw InvalidArgument("Bipartition: parts overlap");
      seen[q] = true;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidArgument("Bipartition: parts must cover the whole register");
  }
}

std::string Bipartition::label() const {
  std::string out;
  for (std::size_t q : part_x) out += static_cast<char>('A' + q);
  out += ':';
  for (std::size_t q : part_y) out += static_cast<char>('A' + q);
  return out;
}

Bipartition parse_bipartition(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("bipartition '" + std::string(text) + "' must look like AC:B");
  }
  auto parse_part = [&](std::string_view s) {
    std::vector<std::size_t> out;
    for (char c : s) {
      const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (up < 'A' || up > 'C') {
        throw ConfigError("bipartition '" + std::string(text) + "' has unknown qubit '" +
                          c + "'");
      }
      out.push_back(static_cast<std::size_t>(up - 'A'));
    }
    if (out.empty()) throw ConfigError("bipartition '" + std::string(text) + "' has an empty side");
    return out;
  };
  return {parse_part(text.substr(0, colon)), parse_part(text.substr(colon + 1))};
}

std::vector<std::vector<Complex>> MeasurementBasis::outcome_vectors() const {
  if (angles.size() != 2 && angles.size() != 4) {
    throw InvalidArgument("MeasurementBasis: expected 2 or 4 angles");
  }
  std::array<Vec4, 4> w;
  const std::size_t n_out = fill_outcomes(angles.data(), n_qubits(), w);
  const std::size_t dim = std::size_t{1} << n_qubits();
  std::vector<std::vector<Complex>> out(n_out);
  for (std::size_t j = 0; j < n_out; ++j) out[j].assign(w[j].begin(), w[j].begin() + dim);
  return out;
}

double entropy_from_eigenvalues(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double ev : eigenvalues) {
    if (ev < -kNegativeEigenvalueLimit) {
      throw NumericalError("entropy: eigenvalue " + std::to_string(ev) +
                           " is too negative for a density matrix");
    }
    if (ev > 0.0) s -= ev * std::log(ev);
  }
  return s;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  return entropy_from_eigenvalues(hermitian_eigenvalues(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

double mutual_information(const DensityMatrix& rho, const Bipartition& bp) {
  bp.validate(rho.n_qubits());
  const double sx = von_neumann_entropy(rho.reduce(sorted(bp.part_x)));
  const double sy = von_neumann_entropy(rho.reduce(sorted(bp.part_y)));
  return sx + sy - von_neumann_entropy(rho);
}

double conditional_entropy(const DensityMatrix& rho, const Bipartition& bp,
                           const MeasurementBasis& basis) {
  const ConditionalEntropy f(rho, bp);
  if (basis.angles.size() != 2 * f.n_measured()) {
    throw InvalidArgument("conditional_entropy: basis has " +
                          std::to_string(basis.n_qubits()) + " qubit(s), measured part has " +
                          std::to_string(f.n_measured()));
  }
  return f(basis.angles.data());
}

DiscordResult quantum_discord_detailed(const DensityMatrix& rho, const Bipartition& bp,
                                       const DiscordSearch& search) {
  const ConditionalEntropy f(rho, bp);
  const std::size_t n_angles = 2 * f.n_measured();
  const double step = f.n_measured() == 1 ? search.grid_step_1q : search.grid_step_2q;
  if (!(step > 0.0) || !(search.min_step > 0.0)) {
    throw InvalidArgument("DiscordSearch: steps must be positive");
  }

  DiscordResult res;
  const double s_xy = von_neumann_entropy(rho);
  const double s_x = von_neumann_entropy(rho.reduce(sorted(bp.part_x)));
  const double s_y = von_neumann_entropy(rho.reduce(sorted(bp.part_y)));
  res.mutual_info = s_x + s_y - s_xy;

  // Stage 1: uniform grid.
  const std::vector<double> thetas = axis(kPi, step);
  const std::vector<double> phis = axis(2.0 * kPi, step);
  std::array<double, 4> cur{};
  std::array<double, 4> best_angles{};
  double best = std::numeric_limits<double>::infinity();
  auto visit = [&]() {
    const double v = f(cur.data());
    ++res.evaluations;
    if (v < best) {
      best = v;
      best_angles = cur;
    }
  };
  for (double t1 : thetas) {
    for (double p1 : phis) {
      cur[0] = t1;
      cur[1] = p1;
      if (n_angles == 2) {
        visit();
        continue;
      }
      for (double t2 : thetas) {
        for (double p2 : phis) {
          cur[2] = t2;
          cur[3] = p2;
          visit();
        }
      }
    }
  }

  // Stage 2: coordinate descent; only strict improvements are accepted, so
  // the result never exceeds the grid minimum.
  if (search.refine) {
    for (double h = step; h >= search.min_step; h *= 0.5) {
      bool improved = true;
      while (improved) {
        improved = false;
        for (std::size_t d = 0; d < n_angles; ++d) {
          for (double sign : {1.0, -1.0}) {
            std::array<double, 4> trial = best_angles;
            trial[d] += sign * h;
            const double v = f(trial.data());
            ++res.evaluations;
            if (v < best - 1e-15) {
              best = v;
              best_angles = trial;
              improved = true;
            }
          }
        }
      }
    }
  }

  res.min_conditional_entropy = best;
  res.basis.angles.assign(best_angles.begin(), best_angles.begin() + n_angles);
  normalize_angles(res.basis.angles);
  res.raw = s_y - s_xy + best;
  res.clamped_by = std::max(0.0, -res.raw);
  res.discord = std::max(0.0, res.raw);
  return res;
}

double quantum_discord(const DensityMatrix& rho, const Bipartition& bp,
                       const DiscordSearch& search) {
  return quantum_discord_detailed(rho, bp, search).discord;
}

double classical_correlations(const DensityMatrix& rho, const Bipartition& bp,
                              const DiscordSearch& search) {
  const DiscordResult d = quantum_discord_detailed(rho, bp, search);
  return std::max(0.0, d.mutual_info - d.discord);
}

EntanglementMeasures concurrence_eof(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) {
    throw InvalidArgument("concurrence_eof: expected a two-qubit state, got " +
                          std::to_string(rho.n_qubits()) + " qubits");
  }
  const ComplexMatrix& m = rho.matrix();
  // Spin flip: (sy (x) sy) rho* (sy (x) sy). sy (x) sy is the anti-diagonal
  // matrix with signs (-1, 1, 1, -1).
  static constexpr std::array<double, 4> sign{-1.0, 1.0, 1.0, -1.0};
  ComplexMatrix flipped(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      flipped(i, j) = sign[i] * sign[j] * std::conj(m(3 - i, 3 - j));
    }
  }
  // The spectrum of rho * flipped equals that of sqrt(rho) flipped sqrt(rho),
  // which is Hermitian.
  const EigenSystem es = hermitian_eigen(m);
  ComplexMatrix sqrt_rho(4);
  for (std::size_t k = 0; k < 4; ++k) {
    const double root = std::sqrt(std::max(0.0, es.values[k]));
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        sqrt_rho(i, j) += root * es.vectors(i, k) * std::conj(es.vectors(j, k));
      }
    }
  }
  ComplexMatrix r = sqrt_rho * flipped * sqrt_rho;
  // Restore exact Hermiticity lost to rounding.
  r = (r + r.adjoint()) * Complex(0.5);
  std::vector<double> ev = hermitian_eigenvalues(r);
  std::vector<double> lam(4);
  for (std::size_t k = 0; k < 4; ++k) lam[k] = std::sqrt(std::max(0.0, ev[3 - k]));

  EntanglementMeasures out;
  out.concurrence = std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
  const double c2 = std::min(1.0, out.concurrence * out.concurrence);
  // (1 - sqrt(1 - C^2)) / 2 without cancellation at small C.
  const double x = c2 / (2.0 * (1.0 + std::sqrt(1.0 - c2)));
  out.eof = binary_entropy_bits(x);
  return out;
}

EntanglementMeasures concurrence_eof(const DensityMatrix& rho, std::size_t q1,
                                     std::size_t q2) {
  if (q1 == q2 || q1 >= rho.n_qubits() || q2 >= rho.n_qubits()) {
    throw InvalidArgument("concurrence_eof: invalid qubit pair");
  }
  const std::array<std::size_t, 2> keep{std::min(q1, q2), std::max(q1, q2)};
  return concurrence_eof(rho.reduce(keep));
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("pearson: series lengths differ (" + std::to_string(x.size()) +
                          " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw InvalidArgument("pearson: need at least two samples");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
      throw InvalidArgument("pearson: non-finite sample");
    }
  }
  auto spread = [](std::span<const double> s) {
    const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    return *hi - *lo;
  };
  if (spread(x) <= kConstantSeriesTol || spread(y) <= kConstantSeriesTol) {
    throw UndefinedValue("pearson: series is constant");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace nrcg
