# Copyright 2026 The nrcg-engine Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Density-matrix simulator for an N-th root CNOT quantum heat engine."""

from ._core import (
    ConfigError,
    InvalidArgument,
    NumericalError,
    StateError,
    UndefinedValue,
    concurrence_eof,
    grid_scan,
    initial_state,
    iteration_unitary,
    mutual_information,
    nrcg_matrix,
    pearson,
    quantum_discord,
    trace,
    von_neumann_entropy,
)

__all__ = [
    "ConfigError",
    "InvalidArgument",
    "NumericalError",
    "StateError",
    "UndefinedValue",
    "concurrence_eof",
    "grid_scan",
    "initial_state",
    "iteration_unitary",
    "mutual_information",
    "nrcg_matrix",
    "pearson",
    "quantum_discord",
    "trace",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
