#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace reach2 {

// Dense vertex index in [0, n). Stable across every structure derived from
// one graph instance.
using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  Edge reversed() const noexcept { return {head, tail}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple digraph in compressed sparse row form: no self-loops, no
// parallel edges, adjacency lists sorted ascending.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  // Builds a graph from an arbitrary edge list. Duplicate edges are collapsed
  // and counted in `duplicates` when supplied. Throws PreconditionError on
  // self-loops or endpoints outside [0, n).
  static Digraph from_edges(std::size_t n, std::span<const Edge> edges,
                            std::size_t* duplicates = nullptr);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return heads_.size(); }

  std::span<const Vertex> out(Vertex v) const noexcept {
    return {heads_.data() + out_offset_[v], heads_.data() + out_offset_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const noexcept {
    return {tails_.data() + in_offset_[v], tails_.data() + in_offset_[v + 1]};
  }

  bool has_edge(Vertex tail, Vertex head) const noexcept;
  bool has_edge(Edge e) const noexcept { return has_edge(e.tail, e.head); }

  // All edges in lexicographic (tail, head) order.
  std::vector<Edge> edges() const;

  Digraph reversed() const;

  // Relabels vertices: vertex `order[i]` of this graph becomes vertex i.
  Digraph permuted(std::span<const Vertex> order) const;

  // Subgraph induced by the contiguous id range [lo, hi), relabeled to
  // [0, hi - lo).
  Digraph induced_range(Vertex lo, Vertex hi) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> out_offset_{0};
  std::vector<Vertex> heads_;
  std::vector<std::uint32_t> in_offset_{0};
  std::vector<Vertex> tails_;
};

// Vertices grouped by strongly connected component, components listed in a
// topological order of the condensation.
struct SccDecomposition {
  std::vector<std::uint32_t> comp_id;   // component index, topological rank
  std::vector<Vertex> order;            // vertices grouped by component
  std::vector<std::uint32_t> comp_start;  // offsets into `order`, size c + 1

  std::size_t num_components() const noexcept { return comp_start.size() - 1; }
  bool strongly_connected(Vertex u, Vertex v) const noexcept {
    return comp_id[u] == comp_id[v];
  }
};

// Iterative Tarjan. Within a block vertices are ascending; blocks follow the
// reverse of Tarjan's emission order.
SccDecomposition scc_decompose(const Digraph& g);

bool is_strongly_connected(const Digraph& g);
bool is_acyclic(const Digraph& g);

// Vertices reachable from `s` avoiding the banned edge and/or vertex. The
// result always contains `s`. `banned_vertex` must differ from `s`.
std::vector<bool> reachable_set(const Digraph& g, Vertex s,
                                std::optional<Edge> banned_edge = std::nullopt,
                                std::optional<Vertex> banned_vertex = std::nullopt);

// Vertex split: v becomes v- (entering) and v+ (leaving) joined by (v-, v+);
// every edge (u, v) becomes (u+, v-).
struct SplitGraph {
  Digraph graph;

  static constexpr Vertex in_copy(Vertex v) noexcept { return 2 * v; }
  static constexpr Vertex out_copy(Vertex v) noexcept { return 2 * v + 1; }
  static constexpr Vertex original(Vertex split) noexcept { return split / 2; }
  static constexpr bool is_in_copy(Vertex split) noexcept { return split % 2 == 0; }
};

SplitGraph split_vertices(const Digraph& g);

// Reachability-hardness gadget over a DAG: two new vertices s, t, the edge
// (s, t) and edges (v, s), (t, v) for every original v.
struct HatGadget {
  Digraph graph;
  Vertex s;
  Vertex t;
};

HatGadget hat_gadget(const Digraph& dag);

// Text edge list: header "n m", then m lines "u v", 1-based ids. Self-loops
// and parallel edges are parse errors.
Digraph parse_edge_list(std::istream& in);
Digraph parse_graph_json(std::istream& in);
// Dispatches on the first non-blank character: '{' selects JSON.
Digraph parse_graph(std::istream& in);

}  // namespace reach2
