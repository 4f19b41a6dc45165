#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reach2/closure_dag.hpp"
#include "reach2/closure_matrix.hpp"
#include "reach2/graph.hpp"

namespace reach2 {

// Closure of an arbitrary digraph. Vertices are laid out in SCC order; each
// block is either one strongly connected component, closed through the
// auxiliary graphs, or split at the component boundary nearest its middle
// (ties to the smaller index) and joined like the DAG recursion.
ClosureMatrix closure(const Digraph& g, ClosureStats* stats = nullptr,
                      const BoolMultiplier& backend = default_multiplier());

// closure() followed by recovery for the Left/Right flavors.
ClosureMatrix closure(const Digraph& g, Flavor flavor);

// Witness for internally vertex-disjoint 2-reachability.
class VertexWitness {
 public:
  enum class Kind : std::uint8_t { Top, Bot, CutVertex, CutEdge };

  static constexpr VertexWitness top() noexcept { return VertexWitness(Kind::Top, {}); }
  static constexpr VertexWitness bot() noexcept { return VertexWitness(Kind::Bot, {}); }
  static constexpr VertexWitness cut_vertex(Vertex v) noexcept {
    return VertexWitness(Kind::CutVertex, {v, v});
  }
  static constexpr VertexWitness cut_edge(Edge e) noexcept {
    return VertexWitness(Kind::CutEdge, e);
  }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr Vertex vertex() const noexcept { return edge_.tail; }
  constexpr Edge edge() const noexcept { return edge_; }

  friend constexpr bool operator==(const VertexWitness&, const VertexWitness&) noexcept = default;

 private:
  constexpr VertexWitness(Kind kind, Edge e) noexcept : kind_(kind), edge_(e) {}
  Kind kind_ = Kind::Bot;
  Edge edge_{};
};

std::string to_string(VertexWitness w);

class VertexClosure {
 public:
  explicit VertexClosure(std::size_t n = 0) : n_(n), cells_(n * n, VertexWitness::bot()) {}
  std::size_t size() const noexcept { return n_; }
  VertexWitness at(std::size_t u, std::size_t v) const noexcept { return cells_[u * n_ + v]; }
  VertexWitness& at(std::size_t u, std::size_t v) noexcept { return cells_[u * n_ + v]; }
  friend bool operator==(const VertexClosure&, const VertexClosure&) = default;

 private:
  std::size_t n_;
  std::vector<VertexWitness> cells_;
};

// Reads closure(split_vertices(g)) at (u+, v-): (x-, x+) names cut vertex x,
// (x+, y-) names edge (x, y). `flavor` picks the recovery applied to the
// split closure first; Left/Right report the first/last separator verbatim,
// Generic reports an interior endpoint of a separating edge as the cut vertex
// and keeps CutEdge only for a lone edge (u, v).
VertexClosure two_vertex_closure(const Digraph& g, Flavor flavor = Flavor::Generic);

}  // namespace reach2
