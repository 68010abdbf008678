// Copyright 2026 The pstlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pstlab/cospectrality.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/graph.hpp"
#include "pstlab/partitions.hpp"
#include "pstlab/pst.hpp"
#include "pstlab/report.hpp"
#include "pstlab/spectral.hpp"
#include "pstlab/walk.hpp"

namespace py = pybind11;
using namespace pstlab;

namespace {

// JSON reports cross the boundary as text and are decoded by the json module.
py::object to_python(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::int_ to_python(const BigInt& x) { return py::int_(py::str(x.str())); }

InputFormat format_from(const std::string& name) {
  if (name == "auto") return InputFormat::Auto;
  if (name == "graph6" || name == "g6") return InputFormat::Graph6;
  if (name == "edges") return InputFormat::EdgeList;
  throw py::value_error("format must be 'auto', 'graph6' or 'edges'");
}

void check_vertex(const SpectralGraph& sg, Vertex u) {
  if (u < 0 || u >= sg.order()) throw py::index_error("vertex " + std::to_string(u) + " out of range");
}

}  // namespace

PYBIND11_MODULE(_pstlab, m) {
  m.doc() = "Perfect state transfer analysis for continuous-time quantum walks";
  m.attr("__version__") = PSTLAB_VERSION;

  auto base_value = py::handle(PyExc_ValueError);
  auto base_runtime = py::handle(PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base_value);
  py::register_exception<PreconditionError>(m, "PreconditionError", base_value);
  py::register_exception<AnalysisRefusal>(m, "AnalysisRefusal", base_runtime);
  py::register_exception<CriticalFailure>(m, "CriticalFailure", base_runtime);

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("cluster", &Tolerances::cluster)
      .def_readwrite("snap", &Tolerances::snap)
      .def_readwrite("support", &Tolerances::support)
      .def_readwrite("pseudo_equitable", &Tolerances::pseudo_equitable)
      .def_readwrite("membership", &Tolerances::membership);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       std::vector<std::string> labels) { return Graph(n, edges, std::move(labels)); }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{},
           py::arg("labels") = std::vector<std::string>{})
      .def_static(
          "parse", [](const std::string& text, const std::string& format) { return parse_graph(text, format_from(format)); },
          py::arg("text"), py::arg("format") = "auto")
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("labels", &Graph::labels)
      .def("edges", &Graph::edges)
      .def("adjacency_matrix", &Graph::adjacency_matrix)
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def("find_label", &Graph::find_label)
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("distance_matrix", [](const Graph& g) {
        auto d = distances(g);
        std::vector<std::vector<std::optional<int>>> out(d.n, std::vector<std::optional<int>>(d.n));
        for (int i = 0; i < d.n; ++i)
          for (int j = 0; j < d.n; ++j)
            if (d.dist[i * d.n + j] != kUnreachable) out[i][j] = d.dist[i * d.n + j];
        return out;
      })
      .def("__repr__", [](const Graph& g) {
        return "<pstlab.Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<SpectralGraph>(m, "SpectralGraph")
      .def(py::init<Graph, Tolerances>(), py::arg("graph"), py::arg("tolerances") = Tolerances{})
      .def_property_readonly("graph", &SpectralGraph::graph)
      .def_property_readonly("order", &SpectralGraph::order)
      .def_property_readonly("eigenvalues", [](const SpectralGraph& sg) { return sg.spectrum().eigenvalues; })
      .def_property_readonly("multiplicities", [](const SpectralGraph& sg) { return sg.spectrum().multiplicities; })
      .def_property_readonly("spectrum_kind", [](const SpectralGraph& sg) { return to_string(sg.spectrum().kind); })
      .def_property_readonly("diameter", [](const SpectralGraph& sg) { return sg.distances().diameter; })
      .def("characteristic_polynomial",
           [](const SpectralGraph& sg) {
             py::list out;
             for (const auto& c : sg.characteristic_polynomial()) out.append(to_python(c));
             return out;
           })
      .def("projector",
           [](const SpectralGraph& sg, std::size_t r) {
             if (r >= sg.spectrum().size()) throw py::index_error("eigenvalue index out of range");
             return sg.projectors().numeric[r];
           })
      .def("eccentricity",
           [](const SpectralGraph& sg, Vertex u) {
             check_vertex(sg, u);
             return sg.distances().ecc[u];
           })
      .def("support",
           [](const SpectralGraph& sg, Vertex u) {
             check_vertex(sg, u);
             return eigenvalue_support(sg, u).support;
           })
      .def("dual_degree",
           [](const SpectralGraph& sg, Vertex u) {
             check_vertex(sg, u);
             return eigenvalue_support(sg, u).dual_degree();
           })
      .def("is_extremal",
           [](const SpectralGraph& sg, Vertex u) {
             check_vertex(sg, u);
             return is_spectrally_extremal(sg, u);
           })
      .def("is_extremal_graph", [](const SpectralGraph& sg) { return is_spectrally_extremal_graph(sg); })
      .def("cospectral",
           [](const SpectralGraph& sg, Vertex u, Vertex v) {
             check_vertex(sg, u);
             check_vertex(sg, v);
             return are_cospectral(sg, u, v);
           })
      .def(
          "sign_pattern",
          [](const SpectralGraph& sg, Vertex u, Vertex v) -> std::optional<std::vector<int>> {
            check_vertex(sg, u);
            check_vertex(sg, v);
            auto sp = are_strongly_cospectral(sg, u, v);
            if (!sp) return std::nullopt;
            return sp->sigmas;
          },
          "Signs on the support of u when u and v are strongly cospectral, else None.")
      .def("antipodal",
           [](const SpectralGraph& sg, Vertex u, Vertex v) {
             check_vertex(sg, u);
             check_vertex(sg, v);
             auto ev = are_antipodal(sg, u, v);
             py::dict out;
             out["definitional"] = ev.definitional;
             out["spectral"] = ev.spectral;
             out["failure"] = ev.definitional_failure;
             return out;
           })
      .def("fidelity",
           [](const SpectralGraph& sg, Vertex u, Vertex v, double t) {
             check_vertex(sg, u);
             check_vertex(sg, v);
             return fidelity(sg, u, v, t);
           })
      .def("evolve",
           [](const SpectralGraph& sg, Vertex u, double t) {
             check_vertex(sg, u);
             return evolve(sg, u, t).amp;
           })
      .def(
          "fidelity_series",
          [](const SpectralGraph& sg, Vertex u, Vertex v, double t_max, int steps) {
            check_vertex(sg, u);
            check_vertex(sg, v);
            if (steps < 2) throw py::value_error("steps must be at least 2");
            std::vector<std::pair<double, double>> out;
            for (const auto& s : fidelity_series(sg, u, v, t_max, steps).samples) out.emplace_back(s.t, s.fidelity);
            return out;
          },
          py::arg("u"), py::arg("v"), py::arg("t_max"), py::arg("steps") = 201)
      .def(
          "oracle_search",
          [](const SpectralGraph& sg, Vertex u, Vertex v, double t_max, double eps) {
            check_vertex(sg, u);
            check_vertex(sg, v);
            auto s = pst_oracle_search(sg, u, v, t_max, 2000, eps);
            py::dict out;
            out["hit"] = s.hit ? py::object(py::make_tuple(s.hit->t, s.hit->fidelity)) : py::object(py::none());
            out["best"] = py::make_tuple(s.best.t, s.best.fidelity);
            return out;
          },
          py::arg("u"), py::arg("v"), py::arg("t_max") = kDefaultScanHorizon, py::arg("eps") = kRefuteFidelity)
      .def("pst_pair",
           [](const SpectralGraph& sg, Vertex u, Vertex v) {
             check_vertex(sg, u);
             check_vertex(sg, v);
             return to_python(verdict_json(pst_decide_pair(sg, u, v), sg.graph()));
           })
      .def(
          "report",
          [](const SpectralGraph& sg, bool verify_oracle) {
            ClassifyOptions opt;
            opt.verify_oracle = verify_oracle;
            return to_python(report_json(classify_graph(sg, opt)));
          },
          py::arg("verify_oracle") = false)
      .def(
          "table",
          [](const SpectralGraph& sg, bool verify_oracle) {
            ClassifyOptions opt;
            opt.verify_oracle = verify_oracle;
            return render_table(classify_graph(sg, opt));
          },
          py::arg("verify_oracle") = false);

  m.def("pst_time", &pst_time, py::arg("alpha"), py::arg("delta"));
  m.def(
      "scan_line",
      [](const std::string& text, bool verify_oracle) {
        ClassifyOptions opt;
        opt.verify_oracle = verify_oracle;
        return to_python(scan_row_json(scan_graph6_line(1, text, Tolerances{}, opt)));
      },
      py::arg("graph6"), py::arg("verify_oracle") = false);
}
