#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubicpm/connectivity.hpp"
#include "cubicpm/decomposition.hpp"
#include "cubicpm/families.hpp"
#include "cubicpm/graph_io.hpp"
#include "cubicpm/isomorphism.hpp"
#include "cubicpm/matchings.hpp"
#include "cubicpm/report_io.hpp"
#include "cubicpm/verifier.hpp"

namespace py = pybind11;
using namespace cubicpm;

namespace {

py::dict report_dict(const LemmaReport& r) {
  py::dict d;
  d["lemma"] = std::string(to_string(r.lemma));
  d["instance"] = r.instance;
  d["params"] = r.params;
  d["hypothesis_met"] = r.hypothesis_met;
  d["bound"] = r.bound.str();
  d["relation"] = std::string(to_string(r.relation));
  d["measured"] = r.measured.str();
  d["verdict"] = std::string(to_string(r.verdict));
  d["reason"] = r.reason;
  return d;
}

std::vector<std::pair<int, int>> edge_pairs(const Multigraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.a, e.b);
  return out;
}

}  // namespace

PYBIND11_MODULE(_cubicpm, m) {
  m.doc() = "Exact perfect-matching tools for cubic multigraphs";

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return Multigraph::from_edge_list(n, edges);
           }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Multigraph::vertex_count)
      .def_property_readonly("edge_count", &Multigraph::edge_count)
      .def("edges", &edge_pairs)
      .def("is_cubic", &Multigraph::is_cubic)
      .def("is_simple", &Multigraph::is_simple)
      .def("is_connected", &Multigraph::is_connected)
      .def("to_edge_list", &write_edge_list)
      .def("__eq__", [](const Multigraph& a, const Multigraph& b) { return a == b; })
      .def("__repr__", [](const Multigraph& g) {
        return "<Multigraph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("named", [](const std::string& name) { return named(name); }, py::arg("name"));
  m.def("named_list", &named_list);
  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); });
  m.def("parse_graph6", [](const std::string& text) { return parse_graph6(text); });
  m.def("ladder", &ladder, py::arg("k"));
  m.def("random_cubic_bridgeless", &random_cubic_bridgeless, py::arg("seed"), py::arg("n"),
        py::arg("simple_only") = false);
  m.def("random_bipartite_cubic", &random_bipartite_cubic, py::arg("seed"), py::arg("n"),
        py::arg("simple_only") = false);
  m.def("random_klee", [](std::uint64_t seed, int n) { return random_klee(seed, n).graph; }, py::arg("seed"),
        py::arg("n"));
  m.def("random_twisted_net", [](std::uint64_t seed, int n) { return random_twisted_net(seed, n).graph; },
        py::arg("seed"), py::arg("n"));
  m.def("exhaustive_cubic_bridgeless", &exhaustive_cubic_bridgeless, py::arg("n"));

  m.def(
      "count_matchings",
      [](const Multigraph& g, std::vector<EdgeId> required, std::vector<EdgeId> forbidden) {
        return count_matchings(g, {std::move(required), std::move(forbidden), {}});
      },
      py::arg("g"), py::arg("required") = std::vector<EdgeId>{}, py::arg("forbidden") = std::vector<EdgeId>{});
  m.def("enumerate_matchings", [](const Multigraph& g) {
    std::vector<std::vector<EdgeId>> out;
    for (const Matching& pm : enumerate_matchings(g)) out.push_back(pm.edge_ids);
    return out;
  });
  m.def("is_matching_covered", &is_matching_covered);
  m.def("bridges", &bridges);
  m.def("cyclic_edge_connectivity", [](const Multigraph& g) { return cyclic_edge_connectivity(g).value; },
        "Minimum cyclic cut size, None when unbounded");
  m.def("is_cyclically_k_edge_connected", &is_cyclically_k_edge_connected);
  m.def("brick_count", py::overload_cast<const Multigraph&>(&brick_count));
  m.def("is_klee", &is_klee);
  m.def("are_isomorphic", &are_isomorphic);

  m.def("lemmas", [] {
    std::vector<std::string> out;
    for (LemmaId id : all_lemmas()) out.emplace_back(to_string(id));
    return out;
  });
  m.def(
      "check",
      [](const std::string& lemma, const Multigraph& g, std::optional<EdgeId> edge, const std::string& instance) {
        CheckParams p;
        p.edge = edge;
        return report_dict(check(parse_lemma(lemma), g, p, instance));
      },
      py::arg("lemma"), py::arg("g"), py::arg("edge") = std::nullopt, py::arg("instance") = "graph");
  m.def(
      "sweep_random",
      [](const std::vector<std::string>& lemmas, std::uint64_t seed, int count, int n_lo, int n_hi, int threads) {
        std::vector<LemmaId> ids;
        for (const std::string& s : lemmas) ids.push_back(parse_lemma(s));
        SweepOptions opts;
        opts.threads = threads;
        opts.stop_at_fail = false;
        std::vector<LemmaReport> reports;
        {
          py::gil_scoped_release release;
          reports = sweep(ids, random_corpus({seed, count, n_lo, n_hi, false, false}), opts);
        }
        return reports_to_json(reports);
      },
      py::arg("lemmas"), py::arg("seed"), py::arg("count"), py::arg("n_lo") = 4, py::arg("n_hi") = 14,
      py::arg("threads") = 1, "Runs a sweep over a seeded random corpus and returns the JSON report array");
}
