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

#include "nrcg/model.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "nrcg/errors.hpp"

namespace nrcg {

namespace {

// Grid endpoints built as k * pi / (n - 1) can overshoot by an ulp.
constexpr double kAngleSlack = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_kt(double kt, const char* who) {
  if (!(kt > 0.0) || !std::isfinite(kt)) {
    throw InvalidArgument(std::string(who) + ": temperature must be positive, got " +
                          std::to_string(kt));
  }
}

}  // namespace

void QubitHamiltonian::validate() const {
  if (!std::isfinite(eps1) || !std::isfinite(eps2) || eps2 < eps1) {
    throw InvalidArgument("QubitHamiltonian: need eps2 >= eps1");
  }
}

ComplexMatrix QubitHamiltonian::matrix() const {
  return ComplexMatrix::diagonal({eps1, eps2});
}

void validate_angles(double theta, double phi) {
  if (!(theta >= -kAngleSlack && theta <= kPi + kAngleSlack)) {
    throw InvalidArgument("theta must lie in [0, pi], got " + std::to_string(theta));
  }
  if (!(phi >= -kAngleSlack && phi <= 2.0 * kPi + kAngleSlack)) {
    throw InvalidArgument("phi must lie in [0, 2 pi], got " + std::to_string(phi));
  }
}

void InitConfig::validate() const {
  check_kt(kt, "InitConfig");
  if (n_qubits != 2 && n_qubits != 3) {
    throw InvalidArgument("InitConfig: n_qubits must be 2 or 3");
  }
  std::visit(Overloaded{
                 [](const PureInit& p) { validate_angles(p.theta, p.phi); },
                 [](const GibbsInit& g) { check_kt(g.kt, "InitConfig(qubit B)"); },
                 [](const DephasedInit& d) { validate_angles(d.theta, 0.0); },
             },
             qubit_b);
}

DensityMatrix gibbs_state(const QubitHamiltonian& h, double kt) {
  h.validate();
  check_kt(kt, "gibbs_state");
  // Shift by the ground energy so the weights stay finite as kt -> 0.
  const double excited = std::exp(-(h.eps2 - h.eps1) / kt);
  const double z = 1.0 + excited;
  return DensityMatrix(ComplexMatrix::diagonal({1.0 / z, excited / z}));
}

DensityMatrix pure_state(double theta, double phi) {
  validate_angles(theta, phi);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e = std::polar(1.0, phi);
  // |psi> = c|0> + e^{i phi} s|1>
  ComplexMatrix m(2);
  m(0, 0) = c * c;
  m(0, 1) = c * s * std::conj(e);
  m(1, 0) = c * s * e;
  m(1, 1) = s * s;
  return DensityMatrix(std::move(m));
}

DensityMatrix dephased_state(double theta) {
  validate_angles(theta, 0.0);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return DensityMatrix(ComplexMatrix::diagonal({c * c, s * s}));
}

DensityMatrix qubit_b_state(const QubitBMode& mode, const QubitHamiltonian& h) {
  return std::visit(
      Overloaded{
          [](const PureInit& p) { return pure_state(p.theta, p.phi); },
          [&h](const GibbsInit& g) { return gibbs_state(h, g.kt); },
          [](const DephasedInit& d) { return dephased_state(d.theta); },
      },
      mode);
}

DensityMatrix initial_system_state(const InitConfig& cfg,
                                   const QubitHamiltonian& h) {
  cfg.validate();
  const DensityMatrix cold = gibbs_state(h, cfg.kt);
  const DensityMatrix b = qubit_b_state(cfg.qubit_b, h);
  ComplexMatrix joint = kron(cold.matrix(), b.matrix());
  if (cfg.n_qubits == 3) joint = kron(joint, cold.matrix());
  return DensityMatrix::trusted(std::move(joint));
}

ComplexMatrix build_system_hamiltonian(const QubitHamiltonian& h,
                                       std::size_t n_qubits) {
  h.validate();
  if (n_qubits != 2 && n_qubits != 3) {
    throw InvalidArgument("build_system_hamiltonian: n_qubits must be 2 or 3");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix out(dim);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    ComplexMatrix term = q == 0 ? h.matrix() : ComplexMatrix::identity(2);
    for (std::size_t r = 1; r < n_qubits; ++r) {
      term = kron(term, r == q ? h.matrix() : ComplexMatrix::identity(2));
    }
    out += term;
  }
  return out;
}

}  // namespace nrcg
