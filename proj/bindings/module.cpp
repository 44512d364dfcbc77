// Copyright 2026 The spinrsc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spinrsc/analysis.hpp"
#include "spinrsc/creation_map.hpp"

namespace py = pybind11;

namespace {

using namespace spinrsc;

py::array_t<double> records_to_array(const std::vector<ScanRecord>& records) {
  const bool reduced =
      !records.empty() &&
      std::holds_alternative<TwoQubitReducedControls>(records.front().controls);
  const py::ssize_t cols = reduced ? 8 : 6;
  py::array_t<double> out({static_cast<py::ssize_t>(records.size()), cols});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t r = 0; r < view.shape(0); ++r) {
    const ScanRecord& rec = records[static_cast<std::size_t>(r)];
    py::ssize_t c = 0;
    if (reduced) {
      const auto& ctl = std::get<TwoQubitReducedControls>(rec.controls);
      view(r, c++) = ctl.phi10;
      view(r, c++) = ctl.phi11;
      view(r, c++) = ctl.phi12;
      view(r, c++) = ctl.phi;
    } else {
      const auto& ctl = std::get<OneQubitControls>(rec.controls);
      view(r, c++) = ctl.phi1;
      view(r, c++) = ctl.phi2;
    }
    view(r, c++) = rec.t;
    view(r, c++) = rec.receiver.lambda;
    view(r, c++) = rec.receiver.beta1;
    view(r, c++) = rec.receiver.beta2;
  }
  return out;
}

SenderControls controls_from_sequence(const std::vector<double>& v) {
  if (v.size() == 2) return OneQubitControls{v[0], v[1]};
  if (v.size() == 4) return TwoQubitReducedControls{v[0], v[1], v[2], v[3]};
  if (v.size() == 12) {
    TwoQubitFullControls full;
    std::copy(v.begin(), v.end(), full.phi.begin());
    return full;
  }
  throw std::invalid_argument("controls must have 2, 4, or 12 entries");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Remote mixed-state creation maps for short XY spin chains";

  py::class_<ChainSpec>(m, "ChainSpec")
      .def(py::init([](int n_sites, double d, double gamma) {
             return ChainSpec{n_sites, d, gamma};
           }),
           py::arg("n_sites") = 3, py::arg("d") = 1.0, py::arg("gamma") = 0.0)
      .def_readwrite("n_sites", &ChainSpec::n_sites)
      .def_readwrite("d", &ChainSpec::d)
      .def_readwrite("gamma", &ChainSpec::gamma);

  py::class_<ScanConfig>(m, "ScanConfig")
      .def(py::init<>())
      .def_readwrite("chain", &ScanConfig::chain)
      .def_readwrite("lambdaB", &ScanConfig::lambdaB)
      .def_readwrite("phi1_points", &ScanConfig::phi1_points)
      .def_readwrite("phi2", &ScanConfig::phi2)
      .def_readwrite("t_points", &ScanConfig::t_points)
      .def_readwrite("t_min", &ScanConfig::t_min)
      .def_readwrite("t_max", &ScanConfig::t_max)
      .def_readwrite("phi10_points", &ScanConfig::phi10_points)
      .def_readwrite("phi11_points", &ScanConfig::phi11_points)
      .def_readwrite("phi12_points", &ScanConfig::phi12_points)
      .def_readwrite("phi_points", &ScanConfig::phi_points)
      .def_readwrite("fixed_t", &ScanConfig::fixed_t)
      .def_readwrite("workers", &ScanConfig::workers);

  py::class_<ReceiverState>(m, "ReceiverState")
      .def_readonly("lam", &ReceiverState::lambda)
      .def_readonly("beta1", &ReceiverState::beta1)
      .def_readonly("beta2", &ReceiverState::beta2)
      .def("__repr__", [](const ReceiverState& r) {
        return "ReceiverState(lam=" + std::to_string(r.lambda) +
               ", beta1=" + std::to_string(r.beta1) +
               ", beta2=" + std::to_string(r.beta2) + ")";
      });

  py::class_<DensityGrid>(m, "DensityGrid")
      .def_readonly("eps_lambda", &DensityGrid::eps_lambda)
      .def_readonly("eps_beta1", &DensityGrid::eps_beta1)
      .def_readonly("n_lambda", &DensityGrid::n_lambda)
      .def_readonly("n_beta1", &DensityGrid::n_beta1)
      .def_readonly("n_states", &DensityGrid::n_states)
      .def_property_readonly("counts",
                             [](const DensityGrid& g) {
                               py::array_t<std::int64_t> out(
                                   {static_cast<py::ssize_t>(g.n_lambda),
                                    static_cast<py::ssize_t>(g.n_beta1)});
                               std::copy(g.counts.begin(), g.counts.end(),
                                         out.mutable_data());
                               return out;
                             })
      .def("S", &DensityGrid::S, py::arg("i"), py::arg("j"))
      .def("lambda_center", &DensityGrid::lambda_center, py::arg("i"))
      .def("beta1_center", &DensityGrid::beta1_center, py::arg("j"));

  m.def("xy_hamiltonian", &xy_hamiltonian, py::arg("chain"));
  m.def(
      "spectral_period",
      [](const ChainSpec& chain) {
        return spectral_period(herm_eig(xy_hamiltonian(chain)));
      },
      py::arg("chain"));
  m.def("su2", &su2, py::arg("phi1"), py::arg("phi2") = 0.0);
  m.def(
      "su4_full",
      [](const std::vector<double>& phi) {
        if (phi.size() != 12) {
          throw std::invalid_argument("su4_full needs 12 parameters");
        }
        TwoQubitFullControls c;
        std::copy(phi.begin(), phi.end(), c.phi.begin());
        return su4_full(c);
      },
      py::arg("phi"));
  m.def(
      "su4_reduced",
      [](double phi10, double phi11, double phi12, double phi) {
        return su4_reduced({phi10, phi11, phi12, phi});
      },
      py::arg("phi10"), py::arg("phi11"), py::arg("phi12"), py::arg("phi"));
  m.def("receiver_params", &receiver_params, py::arg("rho"));
  m.def(
      "evaluate",
      [](const ScanConfig& cfg, const std::vector<double>& controls, double t) {
        return evaluate(cfg, controls_from_sequence(controls), t);
      },
      py::arg("cfg"), py::arg("controls"), py::arg("t"));
  m.def(
      "scan3", [](const ScanConfig& cfg) { return records_to_array(scan3(cfg)); },
      py::arg("cfg"),
      "Sweep (phi1, t); rows are (phi1, phi2, t, lam, beta1, beta2).");
  m.def(
      "scan4", [](const ScanConfig& cfg) { return records_to_array(scan4(cfg)); },
      py::arg("cfg"),
      "Sweep the reduced two-qubit controls at fixed t; rows are "
      "(phi10, phi11, phi12, phi, t, lam, beta1, beta2).");
  m.def(
      "density",
      [](py::array_t<double, py::array::c_style | py::array::forcecast> points,
         double eps) {
        if (points.ndim() != 2 || points.shape(1) != 2) {
          throw std::invalid_argument("points must be an N x 2 array");
        }
        auto view = points.unchecked<2>();
        std::vector<std::pair<double, double>> pairs;
        pairs.reserve(static_cast<std::size_t>(view.shape(0)));
        for (py::ssize_t r = 0; r < view.shape(0); ++r) {
          pairs.emplace_back(view(r, 0), view(r, 1));
        }
        return density_from_points(pairs, eps);
      },
      py::arg("points"), py::arg("eps") = 0.01,
      "Bin (lam, beta1) pairs; lambda cells are half as wide as beta1 cells.");
  m.def(
      "density_max",
      [](const DensityGrid& grid) {
        const DensityMax m_ = density_max(grid);
        return py::make_tuple(m_.s_max, m_.lambda_max, m_.beta1_max);
      },
      py::arg("grid"));
  m.def(
      "boundary",
      [](const DensityGrid& grid) {
        const BoundaryCurve curve = boundary(grid);
        py::array_t<double> out(
            {static_cast<py::ssize_t>(curve.samples.size()), py::ssize_t{3}});
        auto view = out.mutable_unchecked<2>();
        for (py::ssize_t r = 0; r < view.shape(0); ++r) {
          const auto& s = curve.samples[static_cast<std::size_t>(r)];
          view(r, 0) = s.lambda;
          view(r, 1) = s.beta1_upper;
          view(r, 2) = s.beta1_lower;
        }
        return out;
      },
      py::arg("grid"), "Rows are (lam, beta1_upper, beta1_lower).");
  m.def("analytic_boundary", &analytic_boundary, py::arg("x"));
  m.def("absolutely_unavailable", &absolutely_unavailable, py::arg("grids"));
  m.def("creatable_area", &creatable_area, py::arg("grid"));
  m.def("combined_z", &combined_z, py::arg("beta1"), py::arg("beta2"));
  m.def("choose_t0", &choose_t0, py::arg("cfg"), py::arg("t_points") = 52);
  m.def(
      "transfer_map",
      [](const ChainSpec& chain, double phi1, double phi2, double t) {
        return transfer_map(chain, {phi1, phi2}, t);
      },
      py::arg("chain"), py::arg("phi1"), py::arg("phi2"), py::arg("t"));
}
