#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "reach2/applications.hpp"
#include "reach2/closure.hpp"
#include "reach2/closure_dag.hpp"
#include "reach2/closure_scc.hpp"
#include "reach2/dominators.hpp"
#include "reach2/error.hpp"
#include "reach2/generators.hpp"
#include "reach2/graph.hpp"
#include "reach2/io.hpp"
#include "reach2/oracle.hpp"
#include "reach2/parallel.hpp"

namespace py = pybind11;
using namespace reach2;

namespace {

using PyEdge = std::pair<Vertex, Vertex>;

Edge to_edge(const PyEdge& e) { return {e.first, e.second}; }
PyEdge from_edge(Edge e) { return {e.tail, e.head}; }

Digraph make_graph(std::size_t n, const std::vector<PyEdge>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& e : edges) list.push_back(to_edge(e));
  return Digraph::from_edges(n, list);
}

std::vector<PyEdge> graph_edges(const Digraph& g) {
  std::vector<PyEdge> out;
  for (const Edge& e : g.edges()) out.push_back(from_edge(e));
  return out;
}

std::string kind_name(TwoReach v) {
  switch (v.kind()) {
    case TwoReach::Kind::Bot:
      return "bot";
    case TwoReach::Kind::Top:
      return "top";
    case TwoReach::Kind::Edge:
      break;
  }
  return "edge";
}

std::string kind_name(VertexWitness w) {
  switch (w.kind()) {
    case VertexWitness::Kind::Top:
      return "top";
    case VertexWitness::Kind::Bot:
      return "bot";
    case VertexWitness::Kind::CutVertex:
      return "cut_vertex";
    case VertexWitness::Kind::CutEdge:
      break;
  }
  return "cut_edge";
}

void check_cell(std::size_t n, std::size_t u, std::size_t v) {
  if (u >= n || v >= n) throw QueryError("cell index out of range");
}

std::vector<std::optional<Vertex>> parent_list(const DomTree& t) {
  std::vector<std::optional<Vertex>> out;
  for (Vertex v = 0; v < t.num_vertices(); ++v) out.push_back(t.parent(v));
  return out;
}

std::vector<std::optional<Vertex>> root_list(const EdgeDomTree& t) {
  std::vector<std::optional<Vertex>> out;
  for (Vertex v = 0; v < t.num_vertices(); ++v) {
    out.push_back(t.reachable(v) ? std::optional<Vertex>(t.root(v)) : std::nullopt);
  }
  return out;
}

py::tuple verdict_tuple(const oracle::Verdict& v) { return py::make_tuple(v.ok, v.message); }

}  // namespace

PYBIND11_MODULE(_reach2, m) {
  m.doc() = "2-reachability closures, dominator trees and connectivity queries";

  static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<PreconditionError> precondition_error(m, "PreconditionError", error.ptr());
  static py::exception<QueryError> query_error(m, "QueryError", error.ptr());
  static py::exception<InvariantError> invariant_error(m, "InvariantError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const PreconditionError& e) {
      precondition_error(e.what());
    } catch (const QueryError& e) {
      query_error(e.what());
    } catch (const InvariantError& e) {
      invariant_error(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::enum_<Flavor>(m, "Flavor")
      .value("GENERIC", Flavor::Generic)
      .value("LEFT", Flavor::LeftCanonical)
      .value("RIGHT", Flavor::RightCanonical);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<PyEdge>{})
      .def_static(
          "parse",
          [](const std::string& text) {
            std::istringstream in(text);
            return parse_graph(in);
          },
          py::arg("text"), "Parses a 1-based edge list or a JSON graph.")
      .def_property_readonly("n", &Digraph::num_vertices)
      .def_property_readonly("m", &Digraph::num_edges)
      .def("edges", &graph_edges)
      .def("has_edge", [](const Digraph& g, Vertex u, Vertex v) { return g.has_edge(u, v); })
      .def("reversed", &Digraph::reversed)
      .def("__repr__", [](const Digraph& g) {
        return "<Digraph n=" + std::to_string(g.num_vertices()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  py::class_<TwoReach>(m, "Cell")
      .def_property_readonly("kind", [](TwoReach v) { return kind_name(v); })
      .def_property_readonly("edge",
                             [](TwoReach v) -> std::optional<PyEdge> {
                               if (!v.is_edge()) return std::nullopt;
                               return from_edge(v.edge());
                             })
      .def("__eq__", [](TwoReach a, TwoReach b) { return a == b; })
      .def("__hash__", [](TwoReach v) { return std::hash<std::string>{}(to_string(v)); })
      .def("__str__", [](TwoReach v) { return to_string(v); })
      .def("__repr__", [](TwoReach v) { return "<Cell " + to_string(v) + ">"; });

  py::class_<ClosureMatrix>(m, "Closure")
      .def_property_readonly("n", &ClosureMatrix::size)
      .def_property_readonly("flavor", &ClosureMatrix::flavor)
      .def("__len__", &ClosureMatrix::size)
      .def("__getitem__",
           [](const ClosureMatrix& c, std::pair<std::size_t, std::size_t> uv) {
             check_cell(c.size(), uv.first, uv.second);
             return c.at(uv.first, uv.second);
           })
      .def("__eq__", [](const ClosureMatrix& a, const ClosureMatrix& b) { return a == b; })
      .def("rows",
           [](const ClosureMatrix& c) {
             std::vector<std::vector<std::string>> out(c.size());
             for (std::size_t u = 0; u < c.size(); ++u) {
               for (std::size_t v = 0; v < c.size(); ++v) out[u].push_back(to_string(c.at(u, v)));
             }
             return out;
           })
      .def("to_text", &format_closure_text)
      .def("to_json", &format_closure_json)
      .def("recover", [](const ClosureMatrix& c, const std::string& side) {
        if (side == "left") return recover(c, Side::Left);
        if (side == "right") return recover(c, Side::Right);
        throw PreconditionError("side must be 'left' or 'right'");
      });

  py::class_<VertexWitness>(m, "VertexCell")
      .def_property_readonly("kind", [](VertexWitness w) { return kind_name(w); })
      .def_property_readonly("vertex",
                             [](VertexWitness w) -> std::optional<Vertex> {
                               if (w.kind() != VertexWitness::Kind::CutVertex) return std::nullopt;
                               return w.vertex();
                             })
      .def_property_readonly("edge",
                             [](VertexWitness w) -> std::optional<PyEdge> {
                               if (w.kind() != VertexWitness::Kind::CutEdge) return std::nullopt;
                               return from_edge(w.edge());
                             })
      .def("__eq__", [](VertexWitness a, VertexWitness b) { return a == b; })
      .def("__str__", [](VertexWitness w) { return to_string(w); })
      .def("__repr__", [](VertexWitness w) { return "<VertexCell " + to_string(w) + ">"; });

  py::class_<VertexClosure>(m, "VertexClosure")
      .def_property_readonly("n", &VertexClosure::size)
      .def("__len__", &VertexClosure::size)
      .def("__getitem__",
           [](const VertexClosure& c, std::pair<std::size_t, std::size_t> uv) {
             check_cell(c.size(), uv.first, uv.second);
             return c.at(uv.first, uv.second);
           })
      .def("to_text", &format_vertex_closure_text);

  m.def("closure", py::overload_cast<const Digraph&, Flavor>(&closure), py::arg("graph"),
        py::arg("flavor") = Flavor::Generic, py::call_guard<py::gil_scoped_release>());
  m.def("closure_dag", py::overload_cast<const Digraph&>(&closure_dag), py::arg("graph"),
        py::call_guard<py::gil_scoped_release>());
  m.def("closure_scc", &closure_scc, py::arg("graph"), py::call_guard<py::gil_scoped_release>());
  m.def("two_vertex_closure", &two_vertex_closure, py::arg("graph"),
        py::arg("flavor") = Flavor::Generic, py::call_guard<py::gil_scoped_release>());
  m.def(
      "parse_closure",
      [](const std::string& text) {
        std::istringstream in(text);
        return parse_closure(in);
      },
      py::arg("text"));

  m.def(
      "dominator_tree", [](const Digraph& g, Vertex s) { return parent_list(dominator_tree(g, s)); },
      py::arg("graph"), py::arg("source"));
  m.def(
      "all_dominator_trees",
      [](const Digraph& g) {
        std::vector<std::vector<std::optional<Vertex>>> out;
        for (const DomTree& t : all_vertex_dominator_trees(g)) out.push_back(parent_list(t));
        return out;
      },
      py::arg("graph"));
  m.def(
      "edge_dominator_roots",
      [](const Digraph& g, Vertex s) {
        return root_list(edge_dominator_tree(closure(g, Flavor::RightCanonical), s));
      },
      py::arg("graph"), py::arg("source"));

  py::class_<ConnectivityIndex>(m, "ConnectivityIndex")
      .def(py::init<Digraph>(), py::arg("graph"), py::call_guard<py::gil_scoped_release>())
      .def_property_readonly("closure", &ConnectivityIndex::closure)
      .def_property_readonly("right_closure", &ConnectivityIndex::right_closure)
      .def("query", &ConnectivityIndex::query, py::arg("u"), py::arg("v"))
      .def(
          "avoid_edge",
          [](const ConnectivityIndex& ix, Vertex s, Vertex t, PyEdge e) {
            return ix.avoid_edge(s, t, to_edge(e));
          },
          py::arg("s"), py::arg("t"), py::arg("edge"))
      .def("avoid_vertex", &ConnectivityIndex::avoid_vertex, py::arg("s"), py::arg("t"),
           py::arg("w"))
      .def("junction", &ConnectivityIndex::junction, py::arg("s"), py::arg("u"), py::arg("v"))
      .def(
          "junctions",
          [](const ConnectivityIndex& ix, Vertex u, Vertex v) {
            return junctions_report(ix.vertex_trees(), u, v);
          },
          py::arg("u"), py::arg("v"))
      .def(
          "dominator_parents",
          [](const ConnectivityIndex& ix, Vertex s) {
            if (s >= ix.vertex_trees().size()) throw QueryError("source out of range");
            return parent_list(ix.vertex_trees()[s]);
          },
          py::arg("source"))
      .def(
          "edge_dominator_roots",
          [](const ConnectivityIndex& ix, Vertex s) {
            if (s >= ix.edge_trees().size()) throw QueryError("source out of range");
            return root_list(ix.edge_trees()[s]);
          },
          py::arg("source"))
      .def(
          "unreachable_after_edge",
          [](const ConnectivityIndex& ix, Vertex s, PyEdge e) {
            if (s >= ix.edge_trees().size()) throw QueryError("source out of range");
            return unreachable_count(ix.edge_trees()[s], to_edge(e));
          },
          py::arg("s"), py::arg("edge"))
      .def(
          "unreachable_after_vertex",
          [](const ConnectivityIndex& ix, Vertex s, Vertex w) {
            if (s >= ix.vertex_trees().size()) throw QueryError("source out of range");
            return unreachable_count(ix.vertex_trees()[s], w);
          },
          py::arg("s"), py::arg("w"))
      .def("reachability_function",
           [](const ConnectivityIndex& ix) { return reachability_function(ix.vertex_trees()); })
      .def("critical_node",
           [](const ConnectivityIndex& ix) {
             const NodeCriticality r = critical_node(ix.vertex_trees());
             return py::make_tuple(r.best, r.value);
           })
      .def("critical_edge", [](const ConnectivityIndex& ix) {
        const EdgeCriticality r = critical_edge(ix.graph(), ix.edge_trees());
        std::vector<PyEdge> edges;
        for (const Edge& e : r.edges) edges.push_back(from_edge(e));
        std::optional<PyEdge> best;
        if (r.best) best = from_edge(*r.best);
        return py::make_tuple(best, edges, r.loss, r.value);
      });

  py::module_ oracle_mod = m.def_submodule("oracle", "Brute-force references");
  oracle_mod.def("closure", &oracle::closure, py::arg("graph"),
                 py::arg("flavor") = Flavor::Generic);
  oracle_mod.def(
      "validate_closure",
      [](const Digraph& g, const ClosureMatrix& c) {
        return verdict_tuple(oracle::validate_closure(g, c));
      },
      py::arg("graph"), py::arg("closure"));
  oracle_mod.def(
      "validate_vertex_closure",
      [](const Digraph& g, const VertexClosure& c, Flavor flavor) {
        return verdict_tuple(oracle::validate_vertex_closure(g, c, flavor));
      },
      py::arg("graph"), py::arg("closure"), py::arg("flavor") = Flavor::Generic);
  oracle_mod.def(
      "separators",
      [](const Digraph& g, Vertex u, Vertex v) -> std::optional<std::vector<PyEdge>> {
        const auto entry = oracle::separators(g, u, v);
        if (entry.kind == oracle::SeparatorEntry::Kind::Unreachable) return std::nullopt;
        std::vector<PyEdge> out;
        for (const Edge& e : entry.edges) out.push_back(from_edge(e));
        return out;
      },
      py::arg("graph"), py::arg("u"), py::arg("v"));
  oracle_mod.def(
      "reach_pairs",
      [](const Digraph& g, std::optional<Vertex> w, std::optional<PyEdge> e) {
        std::optional<Edge> edge;
        if (e) edge = to_edge(*e);
        return oracle::reach_pairs(g, w, edge);
      },
      py::arg("graph"), py::arg("deleted_vertex") = py::none(),
      py::arg("deleted_edge") = py::none());

  py::module_ gen_mod = m.def_submodule("gen", "Seeded random graphs");
  gen_mod.def("random_dag", &gen::random_dag, py::arg("n"), py::arg("p"), py::arg("seed"));
  gen_mod.def("random_strongly_connected", &gen::random_strongly_connected, py::arg("n"),
              py::arg("p"), py::arg("seed"));
  gen_mod.def("random_mixed", &gen::random_mixed, py::arg("n"), py::arg("p"), py::arg("seed"));
  gen_mod.def("random_digraph", &gen::random_digraph, py::arg("n"), py::arg("p"),
              py::arg("seed"));
  gen_mod.def("layered", &gen::layered, py::arg("n"), py::arg("layers"), py::arg("p"),
              py::arg("seed"));

  m.def("set_max_threads", &set_max_threads, py::arg("threads"));
  m.def("max_threads", &max_threads);
}
