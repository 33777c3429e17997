#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "kpartite/bounds.hpp"
#include "kpartite/canonical.hpp"
#include "kpartite/exact.hpp"
#include "kpartite/graph.hpp"
#include "kpartite/graph_io.hpp"
#include "kpartite/harness.hpp"
#include "kpartite/realizations.hpp"
#include "kpartite/recognition.hpp"
#include "kpartite/witness.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace kpartite;

namespace {

std::optional<std::vector<int>> parts_of(const std::optional<PartitionProfile>& p) {
  if (!p) return std::nullopt;
  return p->parts;
}

PartitionProfile clique_profile(std::vector<int> parts) {
  return make_profile(std::move(parts), ProfileFlavor::clique_sizes);
}

py::dict campaign_row(const CampaignResult& r) {
  py::dict d;
  d["profile"] = r.profile.parts;
  d["realizations"] = r.realization_count;
  d["canonical_alpha"] = r.canonical_alpha;
  d["min_noncanonical_alpha"] = r.min_noncanonical_alpha;
  d["theorem_holds"] = r.theorem_holds;
  d["witness_sound"] = r.witness_sound;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Degree-equivalent realizations of clique unions and complete multipartite graphs";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<SizeLimitExceeded>(m, "SizeLimitExceeded", PyExc_ValueError);
  py::register_exception<OutsideFamily>(m, "OutsideFamily", PyExc_ValueError);
  py::register_exception<CanonicalInput>(m, "CanonicalInput", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), "n"_a)
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), "n"_a, "edges"_a)
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("degree", &Graph::degree, "v"_a)
      .def("degrees", &Graph::degrees)
      .def("has_edge", &Graph::has_edge, "u"_a, "v"_a)
      .def("edges", &Graph::edges)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("complete_graph", &complete_graph, "n"_a);
  m.def("cycle_graph", &cycle_graph, "n"_a);
  m.def("path_graph", &path_graph, "n"_a);
  m.def("petersen_graph", &petersen_graph);
  m.def("clique_union", [](const std::vector<int>& sizes) { return clique_union(sizes); }, "sizes"_a);
  m.def("complete_multipartite", [](const std::vector<int>& parts) { return complete_multipartite(parts); },
        "parts"_a);
  m.def("complement", &complement, "g"_a);

  m.def("to_graph6", &to_graph6, "g"_a);
  m.def("from_graph6", &from_graph6, "text"_a);
  m.def("is_isomorphic", &is_isomorphic, "g"_a, "h"_a);
  m.def("contains_induced", &contains_induced, "g"_a, "pattern"_a);

  m.def("is_complete_multipartite", [](const Graph& g) { return parts_of(is_complete_multipartite(g)); }, "g"_a);
  m.def("is_clique_union", [](const Graph& g) { return parts_of(is_clique_union(g)); }, "g"_a);
  m.def("multipartite_profile_from_degrees",
        [](const std::vector<int>& d) { return parts_of(multipartite_profile_from_degrees(DegreeSequence(d))); },
        "degrees"_a);
  m.def("clique_union_profile_from_degrees",
        [](const std::vector<int>& d) { return parts_of(clique_union_profile_from_degrees(DegreeSequence(d))); },
        "degrees"_a);
  m.def("is_graphical", [](const std::vector<int>& d) { return is_graphical(DegreeSequence(d)); }, "degrees"_a);

  m.def("max_independent_set", [](const Graph& g) { return max_independent_set(g).vertices.members(); }, "g"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("max_clique", [](const Graph& g) { return max_clique(g).vertices.members(); }, "g"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("alpha", [](const Graph& g) { return max_independent_set(g).size(); }, "g"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("omega", [](const Graph& g) { return max_clique(g).size(); }, "g"_a,
        py::call_guard<py::gil_scoped_release>());

  m.def("compare_bounds",
        [](const Graph& g, bool exact) {
          const auto text = report_to_json(compare_bounds(g, exact));
          return py::module_::import("json").attr("loads")(text);
        },
        "g"_a, "exact"_a = true);
  m.def("sharpened_alpha_bound", &sharpened_alpha_bound, "g"_a);
  m.def("sharpened_omega_bound", &sharpened_omega_bound, "g"_a);

  m.def("enumerate_realizations",
        [](const std::vector<int>& d) { return enumerate_realizations(DegreeSequence(d)); }, "degrees"_a,
        py::call_guard<py::gil_scoped_release>());
  m.def("random_switch_walk", &random_switch_walk, "g"_a, "steps"_a, "seed"_a);
  m.def("four_copies", &four_copies, "g"_a);

  m.def("witness_independent_set", [](const Graph& g) { return witness_independent_set(g).vertices.members(); },
        "g"_a);
  m.def("witness_clique", [](const Graph& g) { return witness_clique(g).vertices.members(); }, "g"_a);

  m.def("verify_profile",
        [](std::vector<int> parts) { return campaign_row(verify_profile(clique_profile(std::move(parts)))); },
        "parts"_a);
  m.def("verify_theorem",
        [](int max_n, unsigned threads) {
          CampaignOptions options;
          options.threads = threads;
          std::vector<CampaignResult> results;
          {
            py::gil_scoped_release release;
            results = verify_theorem(max_n, options);
          }
          py::list out;
          for (const auto& r : results) out.append(campaign_row(r));
          return out;
        },
        "max_n"_a, "threads"_a = 1);
  m.def("find_sharp_example",
        [](std::vector<int> parts, const std::vector<std::string>& patterns) {
          std::vector<Graph> graphs;
          for (const auto& p : patterns) graphs.push_back(named_pattern(p));
          return find_sharp_example(clique_profile(std::move(parts)), graphs);
        },
        "parts"_a, "patterns"_a = std::vector<std::string>{});
}
