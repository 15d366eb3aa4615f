// Copyright 2026 The lqc Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "lqc/closed_form.hpp"
#include "lqc/errors.hpp"
#include "lqc/fock_oracle.hpp"
#include "lqc/regions.hpp"
#include "lqc/report.hpp"
#include "lqc/spectrum.hpp"

namespace py = pybind11;
using namespace lqc;

namespace {

Engine engine_arg(const std::string &name) {
  const auto e = parse_engine(name);
  if (!e) throw ValidationError("engine", "unknown engine '" + name + "'");
  return *e;
}

Quantity quantity_arg(const std::string &name) {
  const auto q = parse_quantity(name);
  if (!q) throw ValidationError("quantity", "unknown quantity '" + name + "'");
  return *q;
}

py::dict report_dict(const MeasureReport &rep) {
  py::dict d;
  d["engine"] = std::string(engine_name(rep.engine));
  d["r"] = rep.params.r();
  d["T1"] = rep.params.T1();
  d["T2"] = rep.params.T2();
  d["truncation"] = rep.truncation;
  d["p_cd"] = rep.p_cd;
  d["entropy"] = rep.entropy;
  d["epr"] = rep.epr;
  d["fidelity"] = rep.fidelity;
  d["baseline_entropy"] = rep.baseline_entropy;
  d["baseline_epr"] = rep.baseline_epr;
  d["baseline_fidelity"] = rep.baseline_fidelity;
  d["delta_entropy"] = rep.delta_entropy;
  d["delta_epr"] = rep.delta_epr;
  d["delta_fidelity"] = rep.delta_fidelity;
  d["entropy_enhanced"] = rep.entropy_enhanced;
  d["epr_enhanced"] = rep.epr_enhanced;
  d["fidelity_enhanced"] = rep.fidelity_enhanced;
  if (rep.engine == Engine::ClosedForm) {
    d["fidelity_oracle"] = rep.fidelity_oracle;
    d["fidelity_flagged"] = rep.fidelity_flagged;
  }
  return d;
}

std::vector<double> spectrum_list(const SchmidtSpectrum &s) { return {s.weights().begin(), s.weights().end()}; }

}  // namespace

PYBIND11_MODULE(_lqc, m) {
  m.doc() = "Locally catalysed two-mode squeezed vacuum: measures and enhancement regions";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def(
      "measure",
      [](double r, double T1, double T2, const std::string &engine) {
        return report_dict(report(make_params(r, T1, T2), engine_arg(engine)));
      },
      py::arg("r"), py::arg("T1"), py::arg("T2"), py::arg("engine") = "closed_form");

  m.def(
      "success_probability", [](double r, double T1, double T2) { return success_probability(make_params(r, T1, T2)); },
      py::arg("r"), py::arg("T1"), py::arg("T2"));

  m.def(
      "schmidt_spectrum", [](double r, double T1, double T2) { return spectrum_list(schmidt_spectrum(make_params(r, T1, T2))); },
      py::arg("r"), py::arg("T1"), py::arg("T2"));

  m.def(
      "oracle_spectrum",
      [](double r, double T1, double T2, int N) {
        const auto p = make_params(r, T1, T2);
        const auto res = catalyze_oracle(p, N > 0 ? N : choose_truncation(p));
        return py::make_tuple(spectrum_list(res.spectrum), res.p_cd);
      },
      py::arg("r"), py::arg("T1"), py::arg("T2"), py::arg("N") = 0);

  m.def(
      "cf_fidelity",
      [](const std::vector<double> &weights, int quad_points) {
        return cf_fidelity_oracle(SchmidtSpectrum::from_unnormalized(weights), quad_points);
      },
      py::arg("weights"), py::arg("quad_points") = kDefaultQuadPoints);

  m.def("entropy", [](const std::vector<double> &w) { return entropy_of(SchmidtSpectrum::from_unnormalized(w)); },
        py::arg("weights"));
  m.def("epr", [](const std::vector<double> &w) { return epr_of(SchmidtSpectrum::from_unnormalized(w)); },
        py::arg("weights"));

  m.def(
      "t_range",
      [](const std::string &q, double r, double tol, const std::string &engine) {
        std::vector<std::pair<double, double>> out;
        for (const auto &iv : t_range(quantity_arg(q), r, tol, engine_arg(engine))) out.emplace_back(iv.lo, iv.hi);
        return out;
      },
      py::arg("quantity"), py::arg("r"), py::arg("tol") = 1e-6, py::arg("engine") = "reference");

  m.def(
      "threshold",
      [](const std::string &q, double tol, const std::string &engine) {
        ThresholdResult t;
        {
          py::gil_scoped_release release;
          t = threshold(quantity_arg(q), tol, engine_arg(engine));
        }
        py::dict d;
        d["r_star"] = t.r_star;
        d["r_lo"] = t.r_lo;
        d["r_hi"] = t.r_hi;
        d["tol"] = t.tol;
        return d;
      },
      py::arg("quantity"), py::arg("tol") = 1e-3, py::arg("engine") = "reference");

  m.def(
      "sweep",
      [](const std::string &q, double r, const std::vector<double> &T1, const std::vector<double> &T2,
         const std::string &engine) {
        RegionGrid g;
        {
          py::gil_scoped_release release;
          g = sweep(quantity_arg(q), {r}, T1, T2, engine_arg(engine));
        }
        std::vector<std::vector<double>> delta(T1.size(), std::vector<double>(T2.size()));
        for (std::size_t i = 0; i < T1.size(); ++i) {
          for (std::size_t j = 0; j < T2.size(); ++j) delta[i][j] = g.at(0, i, j).delta;
        }
        return delta;
      },
      py::arg("quantity"), py::arg("r"), py::arg("T1"), py::arg("T2"), py::arg("engine") = "reference");

  m.def("tmsvs_entropy", &tmsvs_entropy, py::arg("r"));
  m.def("tmsvs_epr", &tmsvs_epr, py::arg("r"));
  m.def("tmsvs_fidelity", &tmsvs_fidelity, py::arg("r"));
}
