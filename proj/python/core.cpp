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

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "nrcg/correlations.hpp"
#include "nrcg/errors.hpp"
#include "nrcg/protocol.hpp"
#include "nrcg/sweeps.hpp"
#include "nrcg/thermo.hpp"

namespace py = pybind11;
using namespace nrcg;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

py::array_t<Complex> to_numpy(const ComplexMatrix& m) {
  py::array_t<Complex> out({m.dim(), m.dim()});
  auto v = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) v(i, j) = m(i, j);
  return out;
}

ComplexMatrix from_numpy(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw InvalidArgument("expected a square matrix");
  const std::size_t n = static_cast<std::size_t>(a.shape(0));
  ComplexMatrix m(n);
  auto v = a.unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v(i, j);
  return m;
}

SweepConfig make_config(int case_id, std::size_t qubits, int root, std::optional<std::size_t> iterations,
                        std::optional<std::string> gate_sequence, bool allow_custom) {
  if (case_id != 1 && case_id != 2) throw ConfigError("case must be 1 or 2");
  SweepConfig cfg;
  cfg.protocol.case_id = static_cast<CaseId>(case_id);
  cfg.protocol.n_qubits = qubits;
  cfg.protocol.n_root = root;
  if (gate_sequence) cfg.protocol.gate_sequence = parse_gate_sequence(*gate_sequence);
  cfg.protocol.allow_custom = allow_custom;
  cfg.iterations = iterations;
  return cfg;
}

Bipartition bipartition_arg(const std::string& text) { return parse_bipartition(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Density-matrix simulator for an N-th root CNOT quantum heat engine";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<UndefinedValue>(m, "UndefinedValue", PyExc_ArithmeticError);
  py::register_exception<StateError>(m, "StateError", PyExc_RuntimeError);

  m.def(
      "nrcg_matrix",
      [](int n, const std::string& direction) {
        if (direction != "A>B" && direction != "B>A") throw InvalidArgument("direction must be 'A>B' or 'B>A'");
        return to_numpy(nrcg_matrix(n, direction == "A>B" ? GateDirection::AControlsB : GateDirection::BControlsA));
      },
      py::arg("n"), py::arg("direction") = "A>B");

  m.def(
      "iteration_unitary",
      [](int case_id, std::size_t qubits, int root, std::optional<std::string> gate_sequence,
         bool allow_custom) {
        return to_numpy(iteration_unitary(make_config(case_id, qubits, root, {}, gate_sequence, allow_custom).protocol));
      },
      py::arg("case") = 1, py::arg("qubits") = 2, py::arg("root") = kDefaultRoot,
      py::arg("gate_sequence") = py::none(), py::arg("allow_custom") = false);

  m.def(
      "initial_state",
      [](double kt, double theta, double phi, std::size_t qubits) {
        InitConfig init;
        init.kt = kt;
        init.qubit_b = PureInit{theta, phi};
        init.n_qubits = qubits;
        return to_numpy(initial_system_state(init, QubitHamiltonian{}).matrix());
      },
      py::arg("kt"), py::arg("theta"), py::arg("phi"), py::arg("qubits") = 2);

  m.def(
      "trace",
      [](int case_id, std::size_t qubits, double kt, std::optional<double> theta, std::optional<double> phi,
         int root, std::optional<std::size_t> iterations, bool correlations, std::size_t jobs) {
        SweepConfig cfg = make_config(case_id, qubits, root, iterations, {}, false);
        cfg.kt_grid = {kt};
        cfg.theta = theta;
        cfg.phi = phi;
        cfg.correlations = correlations;
        cfg.jobs = jobs;
        cfg.validate();
        TraceReport rep;
        {
          py::gil_scoped_release release;
          rep = trace_report(cfg);
        }
        py::dict out;
        const std::size_t n = rep.energy.size();
        std::vector<double> work(n), du_sys(n);
        std::vector<std::vector<double>> du(qubits, std::vector<double>(n));
        std::vector<std::string> regime(n);
        for (std::size_t k = 0; k < n; ++k) {
          work[k] = rep.energy[k].work;
          du_sys[k] = rep.energy[k].du_sys;
          for (std::size_t q = 0; q < qubits; ++q) du[q][k] = rep.energy[k].du_per_qubit[q];
          regime[k] = rep.energy[k].regime == Regime::HeatEngine ? "HeatEngine" : "Other";
        }
        out["theta"] = rep.theta;
        out["phi"] = rep.phi;
        out["work"] = py::array(py::cast(work));
        out["dU_sys"] = py::array(py::cast(du_sys));
        for (std::size_t q = 0; q < qubits; ++q) out[py::str("dU_" + std::string(qubit_name(q)))] = py::array(py::cast(du[q]));
        out["regime"] = regime;
        py::list states;
        for (const auto& s : rep.trace.states) states.append(to_numpy(s.matrix()));
        out["states"] = states;
        if (correlations) {
          std::vector<double> mi, dxy, dyx, cxy, cyx;
          std::vector<std::vector<double>> eof;
          for (const auto& r : rep.correlations) {
            mi.push_back(r.mutual_info);
            dxy.push_back(r.discord_xy);
            dyx.push_back(r.discord_yx);
            cxy.push_back(r.cc_xy);
            cyx.push_back(r.cc_yx);
            eof.push_back(r.eof);
          }
          out["bipartition"] = rep.bipartition.label();
          out["MI"] = py::array(py::cast(mi));
          out["D_xy"] = py::array(py::cast(dxy));
          out["D_yx"] = py::array(py::cast(dyx));
          out["CC_xy"] = py::array(py::cast(cxy));
          out["CC_yx"] = py::array(py::cast(cyx));
          out["EOF"] = py::array(py::cast(eof));
        }
        return out;
      },
      py::arg("case") = 1, py::arg("qubits") = 2, py::arg("kt") = kDefaultKt, py::arg("theta") = py::none(),
      py::arg("phi") = py::none(), py::arg("root") = kDefaultRoot, py::arg("iterations") = py::none(),
      py::arg("correlations") = false, py::arg("jobs") = 1);

  m.def(
      "grid_scan",
      [](int case_id, std::size_t qubits, double kt, std::size_t n_theta, std::size_t n_phi, int root,
         std::optional<std::size_t> iterations, std::size_t jobs) {
        SweepConfig cfg = make_config(case_id, qubits, root, iterations, {}, false);
        cfg.kt_grid = {kt};
        cfg.theta_grid.count = n_theta;
        cfg.phi_grid.count = n_phi;
        cfg.jobs = jobs;
        cfg.validate();
        GridScanResult res;
        {
          py::gil_scoped_release release;
          res = grid_scan(cfg);
        }
        py::array_t<double> work({n_theta, n_phi});
        py::array_t<long> arg({n_theta, n_phi});
        auto w = work.mutable_unchecked<2>();
        auto a = arg.mutable_unchecked<2>();
        for (std::size_t i = 0; i < n_theta; ++i) {
          for (std::size_t j = 0; j < n_phi; ++j) {
            w(i, j) = res.cells[i * n_phi + j].max_work;
            a(i, j) = static_cast<long>(res.cells[i * n_phi + j].argmax_iteration);
          }
        }
        const GridCell& best = res.best_cell();
        py::dict out;
        out["theta"] = py::array(py::cast(cfg.theta_grid.values()));
        out["phi"] = py::array(py::cast(cfg.phi_grid.values()));
        out["max_work"] = work;
        out["argmax_iteration"] = arg;
        out["best"] = py::dict(py::arg("theta") = best.theta, py::arg("phi") = best.phi,
                               py::arg("max_work") = best.max_work,
                               py::arg("argmax_iteration") = best.argmax_iteration,
                               py::arg("efficiency") = best.efficiency_at_max);
        return out;
      },
      py::arg("case") = 1, py::arg("qubits") = 2, py::arg("kt") = kDefaultKt, py::arg("n_theta") = 101,
      py::arg("n_phi") = 201, py::arg("root") = kDefaultRoot, py::arg("iterations") = py::none(),
      py::arg("jobs") = 1);

  m.def(
      "von_neumann_entropy", [](const CArray& rho) { return von_neumann_entropy(DensityMatrix(from_numpy(rho))); },
      py::arg("rho"));
  m.def(
      "mutual_information",
      [](const CArray& rho, const std::string& bp) {
        return mutual_information(DensityMatrix(from_numpy(rho)), bipartition_arg(bp));
      },
      py::arg("rho"), py::arg("bipartition") = "A:B");
  m.def(
      "quantum_discord",
      [](const CArray& rho, const std::string& bp) {
        const DiscordResult d = quantum_discord_detailed(DensityMatrix(from_numpy(rho)), bipartition_arg(bp));
        return py::dict(py::arg("discord") = d.discord, py::arg("raw") = d.raw,
                        py::arg("mutual_info") = d.mutual_info,
                        py::arg("min_conditional_entropy") = d.min_conditional_entropy,
                        py::arg("basis") = d.basis.angles);
      },
      py::arg("rho"), py::arg("bipartition") = "A:B");
  m.def(
      "concurrence_eof",
      [](const CArray& rho) {
        const auto e = concurrence_eof(DensityMatrix(from_numpy(rho)));
        return py::make_tuple(e.concurrence, e.eof);
      },
      py::arg("rho"));
  m.def(
      "pearson", [](const std::vector<double>& x, const std::vector<double>& y) { return pearson(x, y); },
      py::arg("x"), py::arg("y"));
}
