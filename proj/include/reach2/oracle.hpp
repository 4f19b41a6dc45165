#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reach2/closure.hpp"
#include "reach2/closure_matrix.hpp"
#include "reach2/graph.hpp"

// Brute-force references. Everything here is computed from plain searches on
// the adjacency lists; none of it touches the matrix machinery.
namespace reach2::oracle {

struct SeparatorEntry {
  enum class Kind : std::uint8_t { Unreachable, TwoEdgeReach, Edges };
  Kind kind = Kind::Unreachable;
  std::vector<Edge> edges;  // separating edges in path order

  friend bool operator==(const SeparatorEntry&, const SeparatorEntry&) = default;
};

// All edges whose removal disconnects v from u, ordered along a u-v path.
SeparatorEntry separators(const Digraph& g, Vertex u, Vertex v);

// Closure holding the first (Left/Generic) or last (Right) separator.
ClosureMatrix closure(const Digraph& g, Flavor flavor = Flavor::Generic);

struct Verdict {
  bool ok = true;
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

// Cell-by-cell validity; canonical flavors must hold exactly the first or
// last separator.
Verdict validate_closure(const Digraph& g, const ClosureMatrix& c);

struct VertexSeparatorEntry {
  enum class Kind : std::uint8_t { Unreachable, TwoVertexReach, Separated };
  Kind kind = Kind::Unreachable;
  std::vector<Vertex> vertices;  // intermediate cut vertices, path order
  // Cut vertices and separating edges interleaved in path order.
  std::vector<VertexWitness> sequence;

  friend bool operator==(const VertexSeparatorEntry&, const VertexSeparatorEntry&) = default;
};

// Requires u != v (PreconditionError).
VertexSeparatorEntry vertex_separators(const Digraph& g, Vertex u, Vertex v);

Verdict validate_vertex_closure(const Digraph& g, const VertexClosure& c,
                                Flavor flavor = Flavor::Generic);

// Ordered pairs (a, b), a != b, both surviving, b reachable from a.
std::uint64_t reach_pairs(const Digraph& g, std::optional<Vertex> deleted_vertex = std::nullopt,
                          std::optional<Edge> deleted_edge = std::nullopt);

// Immediate dominators from vertex deletions; kNoVertex for the source and
// for unreachable vertices.
std::vector<Vertex> immediate_dominators(const Digraph& g, Vertex source);

// Reachable from s avoiding an edge and/or a vertex.
std::vector<bool> reachable(const Digraph& g, Vertex s, std::optional<Edge> banned_edge = std::nullopt,
                            std::optional<Vertex> banned_vertex = std::nullopt);

// Paths s->u and s->v meeting only at s, via unit-capacity max flow on the
// vertex-split graph.
bool is_junction(const Digraph& g, Vertex s, Vertex u, Vertex v);

}  // namespace reach2::oracle
