// Python bindings. Vertices cross the boundary as label strings and edges
// as (label, label) tuples.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "imsolve/errors.hpp"
#include "imsolve/gallai_edmonds.hpp"
#include "imsolve/instances.hpp"
#include "imsolve/matching.hpp"
#include "imsolve/oracle.hpp"
#include "imsolve/solver.hpp"

namespace py = pybind11;
using namespace imsolve;

namespace {

using LabelPair = std::pair<std::string, std::string>;

std::vector<std::string> labels(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(g.label(v));
  return out;
}

std::vector<LabelPair> label_edges(const Graph& g, const EdgeSet& es) {
  std::vector<LabelPair> out;
  out.reserve(es.size());
  for (const Edge& e : es) out.emplace_back(g.label(e.u), g.label(e.v));
  return out;
}

VertexSet vertex_set(const Graph& g, const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& n : names) out.push_back(g.vertex(n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeSet edge_set(const Graph& g, const std::vector<LabelPair>& pairs) {
  EdgeSet out;
  for (const auto& [a, b] : pairs) {
    auto u = g.find(a);
    auto v = g.find(b);
    if (!u || !v) throw UnknownEndpoint("edge " + a + "-" + b + " has an endpoint outside the graph");
    out.push_back(Edge::make(*u, *v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

py::dict stats_dict(const SearchStats& st) {
  py::dict by_rule;
  for (auto [rule, count] : st.branchings_by_rule) by_rule[py::str(std::string(to_string(rule)))] = count;
  py::dict by_red;
  for (auto [rule, count] : st.reductions_by_rule) by_red[py::str(std::string(to_string(rule)))] = count;
  py::dict d;
  d["nodes_visited"] = st.nodes_visited;
  d["max_depth"] = st.max_depth;
  d["branchings_by_rule"] = by_rule;
  d["reductions_by_rule"] = by_red;
  return d;
}

py::dict result_dict(const Graph& g, const SolveResult& r) {
  py::dict d;
  d["answer"] = std::string(to_string(r.answer));
  d["certificate"] = label_edges(g, r.certificate);
  d["budget"] = r.budget;
  d["stats"] = stats_dict(r.stats);
  return d;
}

py::dict structure_dict(const Graph& g, const StructureClass& c) {
  py::dict d;
  d["kind"] = std::string(to_string(c.kind));
  d["U"] = labels(g, c.u);
  d["W"] = labels(g, c.w);
  d["pendants"] = c.pendants;
  d["triangles"] = c.triangles;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact induced matching toolkit";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<TooLarge>(m, "TooLarge", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::vector<std::string>& vertices, const std::vector<LabelPair>& edges) {
             return Graph::build(vertices, edges);
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_static(
          "from_edges",
          [](const std::vector<LabelPair>& edges) {
            std::vector<std::string> names;
            for (const auto& [a, b] : edges) {
              names.push_back(a);
              names.push_back(b);
            }
            std::sort(names.begin(), names.end());
            names.erase(std::unique(names.begin(), names.end()), names.end());
            return Graph::build(names, edges);
          },
          py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("vertices", [](const Graph& g) { return labels(g, g.vertices()); })
      .def_property_readonly("edges", [](const Graph& g) { return label_edges(g, g.edges()); })
      .def("neighbors", [](const Graph& g, const std::string& v) { return labels(g, g.neighbors(g.vertex(v))); })
      .def("degree", [](const Graph& g, const std::string& v) { return g.degree(g.vertex(v)); })
      .def("has_edge",
           [](const Graph& g, const std::string& a, const std::string& b) {
             auto u = g.find(a);
             auto v = g.find(b);
             return u && v && g.adjacent(*u, *v);
           })
      .def("delete_vertices",
           [](const Graph& g, const std::vector<std::string>& s) { return delete_vertices(g, vertex_set(g, s)); })
      .def("induced_subgraph",
           [](const Graph& g, const std::vector<std::string>& s) { return induced_subgraph(g, vertex_set(g, s)); })
      .def("connected_components",
           [](const Graph& g) {
             std::vector<std::vector<std::string>> out;
             for (const auto& c : connected_components(g)) out.push_back(labels(g, c));
             return out;
           })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("__len__", &Graph::order)
      .def("__contains__", [](const Graph& g, const std::string& v) { return g.find(v).has_value(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("verify_induced_matching",
        [](const Graph& g, const std::vector<LabelPair>& m) { return verify_induced_matching(g, edge_set(g, m)); });

  m.def("maximum_matching", [](const Graph& g) { return label_edges(g, maximum_matching(g)); });
  m.def("matching_number", &matching_number);
  m.def("is_factor_critical", &is_factor_critical);
  m.def("konig_cover", [](const Graph& g) { return labels(g, konig_cover(g)); });

  m.def("decompose", [](const Graph& g) {
    auto d = decompose(g);
    py::dict out;
    out["D"] = labels(g, d.d);
    out["A"] = labels(g, d.a);
    out["C"] = labels(g, d.c);
    std::vector<std::vector<std::string>> comps;
    for (const auto& c : d.d_components) comps.push_back(labels(g, c));
    out["d_components"] = comps;
    return out;
  });
  m.def("audit", [](const Graph& g) {
    auto report = audit(g, decompose(g));
    py::dict checks;
    for (const auto& c : report.checks) checks[py::str(c.name)] = c.passed;
    return checks;
  });

  m.def(
      "reduce",
      [](const Graph& g, std::size_t ell) {
        auto r = reduce(Instance{g, ell});
        py::list steps;
        for (const auto& s : r.trace.steps) {
          py::dict step;
          step["rule"] = std::string(to_string(s.rule));
          step["deleted"] = labels(g, s.deleted);
          if (s.harvested) {
            step["harvested"] = LabelPair{g.label(s.harvested->u), g.label(s.harvested->v)};
          } else {
            step["harvested"] = py::none();
          }
          steps.append(step);
        }
        return py::make_tuple(r.instance.graph, r.instance.ell, label_edges(g, r.harvested), steps);
      },
      py::arg("graph"), py::arg("ell"));

  m.def(
      "solve",
      [](const Graph& g, std::size_t ell, std::optional<std::size_t> budget) {
        Instance inst{g, ell};
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = budget ? solve_imba(inst, *budget) : solve_auto(inst);
        }
        return result_dict(g, r);
      },
      py::arg("graph"), py::arg("ell"), py::arg("budget") = py::none(),
      "Branch-and-reduce solver. Without a budget, iterative deepening gives a definitive answer.");
  m.def(
      "solve_simple",
      [](const Graph& g, std::size_t ell) {
        SolveResult r;
        {
          py::gil_scoped_release release;
          r = solve_imbtg(Instance{g, ell});
        }
        return result_dict(g, r);
      },
      py::arg("graph"), py::arg("ell"));

  m.def(
      "brute_im",
      [](const Graph& g, std::size_t cap) {
        auto r = brute_im(g, cap);
        return py::make_tuple(r.size, label_edges(g, r.witness));
      },
      py::arg("graph"), py::arg("cap") = kDefaultOracleCap);
  m.def("brute_mm", &brute_mm, py::arg("graph"), py::arg("cap") = kDefaultOracleCap);
  m.def("brute_is", &brute_is, py::arg("graph"), py::arg("cap") = kDefaultOracleCap);
  m.def("brute_vc", &brute_vc, py::arg("graph"), py::arg("cap") = kDefaultOracleCap);
  m.def("brute_ds", &brute_ds, py::arg("graph"), py::arg("cap") = kDefaultOracleCap);
  m.def(
      "parameters",
      [](const Graph& g, std::size_t ell, std::size_t cap) {
        auto p = parameters(g, ell, cap);
        py::dict d;
        d["n"] = p.n;
        d["ell"] = p.ell;
        d["mm"] = p.mm;
        d["is"] = p.is;
        d["im"] = p.im;
        d["vc"] = p.vc;
        d["k_trivial"] = p.k_trivial.value();
        d["k_mm"] = p.k_mm;
        d["k_is"] = p.k_is;
        d["k_avg"] = p.k_avg.value();
        return d;
      },
      py::arg("graph"), py::arg("ell"), py::arg("cap") = kDefaultOracleCap);
  m.def("recognize_cameron_walker", [](const Graph& g) { return structure_dict(g, recognize_cameron_walker(g)); });
  m.def("classify_tight", [](const Graph& g) { return structure_dict(g, classify_tight(g)); });

  m.def("read_instance", [](const std::string& text) {
    auto inst = read_instance(text);
    return py::make_tuple(inst.graph, inst.ell);
  });
  m.def("write_instance", [](const Graph& g, std::size_t ell) { return write_instance(Instance{g, ell}); });
  m.def("load_instance", [](const std::string& path) {
    auto inst = load_instance(path);
    return py::make_tuple(inst.graph, inst.ell);
  });
  m.def("fixture", [](const std::string& name) { return fixture(name); });
  m.def("gen_random", &gen_random, py::arg("n"), py::arg("p"), py::arg("seed") = 0);
  m.def("generate", [](const std::string& spec, std::uint64_t seed) { return generate(spec, seed); }, py::arg("spec"),
        py::arg("seed") = 0);
  m.def("reduce_dominating_set", [](const Graph& g, std::size_t ell) {
    auto r = reduce_dominating_set(g, ell);
    return py::make_tuple(r.graph, r.ell);
  });
  m.def(
      "reduce_multicolored_is",
      [](const Graph& g, std::optional<std::vector<std::vector<std::string>>> cliques) {
        std::vector<VertexSet> parts;
        if (cliques) {
          for (const auto& c : *cliques) parts.push_back(vertex_set(g, c));
        } else {
          parts = greedy_clique_partition(g);
        }
        auto r = reduce_multicolored_is(g, parts);
        return py::make_tuple(r.graph, r.ell);
      },
      py::arg("graph"), py::arg("cliques") = py::none());
}
