#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reach2/graph.hpp"

namespace reach2 {

// Dominator tree of the flow graph rooted at `source`. Vertices unreachable
// from the source have no parent and no interval label.
class DomTree {
 public:
  DomTree() = default;

  // Builds the tree from immediate-dominator links. `parent[v]` must be unset
  // exactly for the source and unreachable vertices, and the links must form
  // a tree rooted at the source; InvariantError otherwise.
  static DomTree from_parents(Vertex source, std::vector<Vertex> parent);

  Vertex source() const noexcept { return source_; }
  std::size_t num_vertices() const noexcept { return parent_.size(); }

  bool reachable(Vertex v) const noexcept { return v == source_ || parent_[v] != kNoVertex; }
  std::optional<Vertex> parent(Vertex v) const noexcept {
    if (parent_[v] == kNoVertex) return std::nullopt;
    return parent_[v];
  }
  std::span<const Vertex> parents() const noexcept { return parent_; }
  std::span<const Vertex> children(Vertex v) const noexcept {
    return {child_list_.data() + child_offset_[v], child_list_.data() + child_offset_[v + 1]};
  }

  std::size_t reachable_count() const noexcept { return subtree_size_[source_]; }
  // Number of vertices dominated by v (including v); 0 when unreachable.
  std::uint32_t subtree_size(Vertex v) const noexcept { return subtree_size_[v]; }

  // True iff u dominates v. O(1). Throws QueryError for unreachable or
  // out-of-range arguments.
  bool is_ancestor(Vertex u, Vertex v) const;

  // The child of the source whose subtree holds v; kNoVertex for the source
  // itself and for unreachable vertices.
  Vertex top_child(Vertex v) const noexcept { return top_child_[v]; }

  friend bool operator==(const DomTree& a, const DomTree& b) {
    return a.source_ == b.source_ && a.parent_ == b.parent_;
  }

 private:
  Vertex source_ = 0;
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> child_offset_;
  std::vector<Vertex> child_list_;
  std::vector<std::uint32_t> dfs_in_;
  std::vector<std::uint32_t> dfs_out_;
  std::vector<std::uint32_t> subtree_size_;
  std::vector<Vertex> top_child_;
};

// Iterative data-flow dominators over reverse postorder.
DomTree dominator_tree(const Digraph& g, Vertex source);

// Bridges of the flow graph: edges (d(v), v) lying on every source-to-v path.
struct BridgeDecomposition {
  std::vector<Edge> bridges;          // sorted
  std::vector<Vertex> tree_root;      // r_v; kNoVertex when unreachable
  std::vector<bool> is_bridge_head;
  std::vector<Vertex> bridge_tail;    // d(v) for bridge heads v, else kNoVertex

  bool is_bridge(Edge e) const noexcept {
    return e.head < is_bridge_head.size() && is_bridge_head[e.head] &&
           bridge_tail[e.head] == e.tail;
  }
};

BridgeDecomposition bridges_of_flowgraph(const DomTree& tree, const Digraph& g);

// Free-function form of DomTree::is_ancestor.
bool is_ancestor(const DomTree& tree, Vertex u, Vertex v);

}  // namespace reach2
