#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reach2/closure.hpp"
#include "reach2/closure_matrix.hpp"
#include "reach2/dominators.hpp"
#include "reach2/graph.hpp"

namespace reach2 {

// Edge-dominator tree of one source: every reachable v carries r_v, the head
// of the last bridge on all source-to-v paths (the source when there is
// none). Roots form the contracted tree with parent d~(y) = r_x for the
// bridge (x, y).
class EdgeDomTree {
 public:
  EdgeDomTree() = default;

  // `root[v]` = r_v or kNoVertex when unreachable; `bridge_tail[y]` = x for
  // each bridge (x, y), kNoVertex elsewhere. InvariantError on inconsistent
  // labels.
  static EdgeDomTree from_labels(Vertex source, std::vector<Vertex> root,
                                 std::vector<Vertex> bridge_tail);

  Vertex source() const noexcept { return source_; }
  std::size_t num_vertices() const noexcept { return root_.size(); }
  bool reachable(Vertex v) const noexcept { return root_[v] != kNoVertex; }
  std::size_t reachable_count() const noexcept { return reachable_count_; }

  Vertex root(Vertex v) const noexcept { return root_[v]; }
  std::span<const Vertex> roots() const noexcept { return root_; }
  std::optional<Vertex> bridge_tail(Vertex y) const noexcept;
  // d~(y) for a bridge head y.
  std::optional<Vertex> contracted_parent(Vertex y) const noexcept;
  bool is_bridge(Edge e) const noexcept;

  // Number of vertices whose root lies in the contracted subtree of root y.
  std::uint32_t descendants(Vertex y) const noexcept { return descendants_[y]; }
  // Both arguments must be roots.
  bool contracted_ancestor(Vertex a, Vertex b) const noexcept {
    return in_[a] <= in_[b] && out_[b] <= out_[a];
  }

  // True iff e lies on every source-to-v path (false when v is unreachable).
  bool on_all_paths(Edge e, Vertex v) const noexcept;

  friend bool operator==(const EdgeDomTree& a, const EdgeDomTree& b) {
    return a.source_ == b.source_ && a.root_ == b.root_ && a.tail_ == b.tail_;
  }

 private:
  Vertex source_ = 0;
  std::vector<Vertex> root_;
  std::vector<Vertex> tail_;
  std::vector<Vertex> parent_;  // d~ over roots
  std::vector<std::uint32_t> descendants_;
  std::vector<std::uint32_t> in_;
  std::vector<std::uint32_t> out_;
  std::size_t reachable_count_ = 0;
};

// Row s of a right-canonical closure gives the tree of source s in O(n).
// PreconditionError for other flavors.
EdgeDomTree edge_dominator_tree(const ClosureMatrix& right_closure, Vertex source);
std::vector<EdgeDomTree> all_edge_dominator_trees(const ClosureMatrix& right_closure);

// Reference construction from the dominator tree and its bridges.
EdgeDomTree edge_dominator_tree_direct(const Digraph& g, Vertex source);

// Vertex dominator trees of every source, read off the right closure of the
// vertex-split graph.
std::vector<DomTree> all_vertex_dominator_trees(const Digraph& g);
std::vector<DomTree> vertex_dominator_trees_from_split(const ClosureMatrix& split_right_closure);

// Is t reachable from s once e is deleted? O(1).
bool avoid_edge_query(std::span<const EdgeDomTree> trees, Vertex s, Vertex t, Edge e);
// Is t reachable from s once w is deleted? QueryError when w is s or t.
bool avoid_vertex_query(std::span<const DomTree> trees, Vertex s, Vertex t, Vertex w);

// Vertices that lose reachability from the tree's source when e (or w, which
// is counted itself) is deleted.
std::size_t unreachable_count(const EdgeDomTree& tree, Edge e);
std::size_t unreachable_count(const DomTree& tree, Vertex w);

// Are there s-u and s-v paths sharing only s? Unreachable u or v: false.
// u == s or v == s: true when the other is reachable.
bool junction_test(std::span<const DomTree> trees, Vertex s, Vertex u, Vertex v);
std::vector<Vertex> junctions_report(std::span<const DomTree> trees, Vertex u, Vertex v);

// f counts ordered pairs (a, b), a != b, with b reachable from a.
struct NodeCriticality {
  std::vector<std::uint64_t> value;  // f(G \ v)
  Vertex best = 0;                   // argmin, lowest index on ties
};

struct EdgeCriticality {
  std::vector<Edge> edges;           // lexicographic
  std::vector<std::uint64_t> loss;   // pairs destroyed by deleting the edge
  std::vector<std::uint64_t> value;  // f(G \ e)
  std::optional<Edge> best;          // argmax loss, smallest edge on ties
};

std::uint64_t reachability_function(std::span<const DomTree> trees);
NodeCriticality critical_node(std::span<const DomTree> trees);
EdgeCriticality critical_edge(const Digraph& g, std::span<const EdgeDomTree> trees);

// All preprocessing needed to answer every query kind for one graph.
class ConnectivityIndex {
 public:
  explicit ConnectivityIndex(Digraph g);

  const Digraph& graph() const noexcept { return graph_; }
  const ClosureMatrix& closure() const noexcept { return closure_; }
  const ClosureMatrix& right_closure() const noexcept { return right_; }
  std::span<const EdgeDomTree> edge_trees() const noexcept { return edge_trees_; }
  std::span<const DomTree> vertex_trees() const noexcept { return vertex_trees_; }

  TwoReach query(Vertex u, Vertex v) const { return reach2::query(closure_, u, v); }
  bool avoid_edge(Vertex s, Vertex t, Edge e) const {
    return avoid_edge_query(edge_trees_, s, t, e);
  }
  bool avoid_vertex(Vertex s, Vertex t, Vertex w) const {
    return avoid_vertex_query(vertex_trees_, s, t, w);
  }
  bool junction(Vertex s, Vertex u, Vertex v) const {
    return junction_test(vertex_trees_, s, u, v);
  }

 private:
  Digraph graph_;
  ClosureMatrix closure_;
  ClosureMatrix right_;
  std::vector<EdgeDomTree> edge_trees_;
  std::vector<DomTree> vertex_trees_;
};

}  // namespace reach2
