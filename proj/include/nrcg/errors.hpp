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

#ifndef NRCG_ERRORS_HPP
#define NRCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nrcg {

/// Bad input to a library call: wrong dimensions, out-of-range angles,
/// non-Hermitian or non-unitary matrices.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was requested in a state where it is not defined, e.g.
/// efficiency outside the heat-engine regime.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A quantity has no value for the given input (zero heat flow, constant
/// series in a correlation coefficient).
class UndefinedValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An invariant that must hold for any valid input was violated during a
/// computation (trace drift, loss of Hermiticity, eigensolver failure).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user configuration (CLI flags or config file).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nrcg

#endif  // NRCG_ERRORS_HPP
