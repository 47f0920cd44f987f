#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "qcgeom/certify.hpp"
#include "qcgeom/code_file.hpp"
#include "qcgeom/cover.hpp"
#include "qcgeom/families.hpp"
#include "qcgeom/graph.hpp"
#include "qcgeom/nagata.hpp"
#include "qcgeom/report.hpp"
#include "qcgeom/stabilizer.hpp"

namespace py = pybind11;
using namespace qcgeom;

namespace {

py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object distance_or_none(const Distance& d) {
  if (!d.is_finite()) return py::none();
  return py::int_(d.value());
}

StabilizerCode code_from_strings(std::size_t n, const std::vector<std::string>& generators) {
  std::vector<PauliOperator> gens;
  for (const auto& g : generators) gens.push_back(PauliOperator::from_string(g));
  return StabilizerCode(n, std::move(gens));
}

std::vector<ScalePair> to_pairs(const std::vector<std::pair<double, double>>& pairs) {
  std::vector<ScalePair> out;
  for (auto [R, r] : pairs) out.push_back({R, r});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connectivity-graph geometry and distance bounds for stabilizer codes";
  m.attr("__version__") = kToolVersion;

  py::class_<PauliOperator>(m, "PauliOperator")
      .def(py::init(&PauliOperator::from_string), py::arg("text"))
      .def_property_readonly("num_qubits", &PauliOperator::num_qubits)
      .def_property_readonly("weight", &PauliOperator::weight)
      .def_property_readonly("support", &PauliOperator::support)
      .def("__str__", &PauliOperator::to_string)
      .def("__repr__", [](const PauliOperator& p) { return "PauliOperator('" + p.to_string() + "')"; })
      .def(py::self == py::self);

  m.def("symplectic_product", &symplectic_product, py::arg("p"), py::arg("q"));

  py::class_<StabilizerCode>(m, "StabilizerCode")
      .def(py::init(&code_from_strings), py::arg("n"), py::arg("generators"))
      .def_property_readonly("n", &StabilizerCode::num_qubits)
      .def_property_readonly("k", &StabilizerCode::num_logicals)
      .def_property_readonly("rank", &StabilizerCode::rank)
      .def_property_readonly("generators",
                             [](const StabilizerCode& c) {
                               std::vector<std::string> out;
                               for (const auto& g : c.generators()) out.push_back(g.to_string());
                               return out;
                             })
      .def("contains", &StabilizerCode::contains);

  m.def("logical_count", &logical_count, py::arg("code"));
  m.def(
      "is_correctable",
      [](const StabilizerCode& code, std::vector<std::size_t> qubits) {
        return is_correctable(code, ErasureSet(std::move(qubits)));
      },
      py::arg("code"), py::arg("qubits"));
  m.def(
      "min_distance",
      [](const StabilizerCode& code, std::size_t cap) { return to_python(distance_json(min_distance(code, cap))); },
      py::arg("code"), py::arg("weight_cap") = 0,
      "Brute-force distance; weight_cap=0 searches all sizes.");

  py::class_<ConnectivityGraph>(m, "ConnectivityGraph")
      .def(py::init<std::size_t, const std::vector<Edge>&>(), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &ConnectivityGraph::num_vertices)
      .def_property_readonly("edges", &ConnectivityGraph::edges)
      .def("neighbors", &ConnectivityGraph::neighbors)
      .def("distance", [](const ConnectivityGraph& g, Vertex u, Vertex v) { return distance_or_none(g.distance(u, v)); })
      .def("diameter", [](const ConnectivityGraph& g) { return distance_or_none(g.diameter()); })
      .def("stats", [](const ConnectivityGraph& g) { return to_python(graph_stats_json(g)); });

  m.def("build_connectivity_graph", &build_connectivity_graph, py::arg("code"));
  m.def("path_graph", &path_graph, py::arg("n"));
  m.def("grid_graph", &grid_graph, py::arg("width"), py::arg("height"));
  m.def("complete_graph", &complete_graph, py::arg("n"));
  m.def("boundary", &boundary, py::arg("g"), py::arg("u"));
  m.def("ball", &ball, py::arg("g"), py::arg("center"), py::arg("r"));
  m.def(
      "set_distance",
      [](const ConnectivityGraph& g, VertexSet a, VertexSet b) {
        return distance_or_none(set_distance(g, normalize(std::move(a)), normalize(std::move(b))));
      },
      py::arg("g"), py::arg("a"), py::arg("b"));
  m.def("b_max", &b_max, py::arg("g"), py::arg("r"));

  m.def(
      "covering_number",
      [](const ConnectivityGraph& g, Vertex center, double R, double r, bool exact) {
        return covering_number(g, center, R, r, exact ? CoverMode::Exact : CoverMode::Greedy);
      },
      py::arg("g"), py::arg("center"), py::arg("R"), py::arg("r"), py::arg("exact") = true);
  m.def(
      "assouad_fit",
      [](const ConnectivityGraph& g, double max_radius, const std::vector<std::pair<double, double>>& pairs,
         std::uint64_t seed) { return to_python(estimate_json(assouad_fit(g, max_radius, to_pairs(pairs), seed))); },
      py::arg("g"), py::arg("max_radius"), py::arg("pairs"), py::arg("seed") = 0);

  m.def(
      "find_nagata_decomposition",
      [](const ConnectivityGraph& g, std::size_t dim, double r, double c_max, double c_min) {
        NagataSearchOptions options;
        options.c_min = c_min;
        return to_python(search_json(find_nagata_decomposition(g, dim, r, c_max, options)));
      },
      py::arg("g"), py::arg("m") = 1, py::arg("r") = 2.0, py::arg("c_max") = 4.0, py::arg("c_min") = 1.0);
  m.def(
      "verify_decomposition",
      [](const ConnectivityGraph& g, std::vector<Collection> collections, double r, double c, std::size_t dim) {
        Decomposition d{std::move(collections), r, c, dim};
        for (auto& coll : d.collections) {
          for (auto& block : coll) block = normalize(std::move(block));
        }
        const auto res = verify_decomposition(g, d);
        py::dict out;
        out["valid"] = res.valid();
        if (res.valid()) {
          out["certificate"] = to_python(certificate_json(*res.certificate));
        } else {
          out["violation"] = res.violation->describe();
        }
        return out;
      },
      py::arg("g"), py::arg("collections"), py::arg("r"), py::arg("c"), py::arg("m") = 1);

  m.def(
      "certify",
      [](const StabilizerCode& code, bool full, std::uint64_t seed) {
        CertifyOptions options;
        options.full = full;
        options.seed = seed;
        const auto text = serialize_code_file(code);
        return to_python(certify_document(code, text, options, certify_code(code, options)));
      },
      py::arg("code"), py::arg("full") = false, py::arg("seed") = 0);

  m.def("repetition_code", &repetition_code, py::arg("n"));
  m.def("surface_code", &surface_code, py::arg("L"));
  m.def("five_qubit_code", &five_qubit_code);
  m.def("random_local_1d", &random_local_1d, py::arg("n"), py::arg("window"), py::arg("weight"),
        py::arg("count"), py::arg("seed"));

  m.def("parse_code_file", &parse_code_file, py::arg("text"));
  m.def("serialize_code_file", &serialize_code_file, py::arg("code"));
}
