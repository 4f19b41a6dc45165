#include "reach2/dominators.hpp"

#include <algorithm>
#include <utility>

#include "reach2/error.hpp"

namespace reach2 {

DomTree DomTree::from_parents(Vertex source, std::vector<Vertex> parent) {
  const std::size_t n = parent.size();
  if (source >= n) throw InvariantError("dominator tree source out of range");
  if (parent[source] != kNoVertex) throw InvariantError("dominator tree source has a parent");

  DomTree t;
  t.source_ = source;
  t.child_offset_.assign(n + 1, 0);
  std::size_t linked = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (parent[v] == kNoVertex) continue;
    if (parent[v] >= n || parent[v] == v) throw InvariantError("invalid dominator link");
    ++t.child_offset_[parent[v] + 1];
    ++linked;
  }
  for (std::size_t v = 0; v < n; ++v) t.child_offset_[v + 1] += t.child_offset_[v];
  t.child_list_.resize(linked);
  {
    std::vector<std::uint32_t> cursor(t.child_offset_.begin(), t.child_offset_.end() - 1);
    // Ascending v gives ascending children lists.
    for (Vertex v = 0; v < n; ++v) {
      if (parent[v] != kNoVertex) t.child_list_[cursor[parent[v]]++] = v;
    }
  }
  t.parent_ = std::move(parent);

  t.dfs_in_.assign(n, 0);
  t.dfs_out_.assign(n, 0);
  t.subtree_size_.assign(n, 0);
  t.top_child_.assign(n, kNoVertex);
  std::uint32_t clock = 0;
  std::size_t visited = 0;
  std::vector<std::pair<Vertex, std::uint32_t>> frames{{source, 0}};
  t.dfs_in_[source] = clock++;
  t.subtree_size_[source] = 1;
  ++visited;
  while (!frames.empty()) {
    auto& [v, pos] = frames.back();
    const auto kids = t.children(v);
    if (pos < kids.size()) {
      const Vertex c = kids[pos++];
      t.dfs_in_[c] = clock++;
      t.subtree_size_[c] = 1;
      t.top_child_[c] = v == source ? c : t.top_child_[v];
      ++visited;
      frames.push_back({c, 0});
      continue;
    }
    const Vertex done = v;
    t.dfs_out_[done] = clock++;
    frames.pop_back();
    if (!frames.empty()) t.subtree_size_[frames.back().first] += t.subtree_size_[done];
  }
  if (visited != linked + 1) throw InvariantError("dominator links do not form a tree");
  return t;
}

bool DomTree::is_ancestor(Vertex u, Vertex v) const {
  if (u >= parent_.size() || v >= parent_.size()) throw QueryError("vertex id out of range");
  if (!reachable(u) || !reachable(v)) {
    throw QueryError("ancestor query on a vertex unreachable from the source");
  }
  return dfs_in_[u] <= dfs_in_[v] && dfs_out_[v] <= dfs_out_[u];
}

bool is_ancestor(const DomTree& tree, Vertex u, Vertex v) { return tree.is_ancestor(u, v); }

DomTree dominator_tree(const Digraph& g, Vertex source) {
  const std::size_t n = g.num_vertices();
  if (source >= n) throw QueryError("source out of range");

  // Postorder numbers via iterative DFS; neighbours visited ascending.
  constexpr std::uint32_t kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> post(n, kUnseen);
  std::vector<Vertex> by_post;
  by_post.reserve(n);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<Vertex, std::uint32_t>> frames{{source, 0}};
  seen[source] = true;
  while (!frames.empty()) {
    auto& [v, pos] = frames.back();
    const auto adj = g.out(v);
    if (pos < adj.size()) {
      const Vertex w = adj[pos++];
      if (!seen[w]) {
        seen[w] = true;
        frames.push_back({w, 0});
      }
      continue;
    }
    post[v] = static_cast<std::uint32_t>(by_post.size());
    by_post.push_back(v);
    frames.pop_back();
  }

  std::vector<Vertex> idom(n, kNoVertex);
  idom[source] = source;
  auto intersect = [&](Vertex a, Vertex b) {
    while (a != b) {
      while (post[a] < post[b]) a = idom[a];
      while (post[b] < post[a]) b = idom[b];
    }
    return a;
  };
  for (bool changed = true; changed;) {
    changed = false;
    // Reverse postorder, skipping the source (highest post number).
    for (auto it = by_post.rbegin() + 1; it != by_post.rend(); ++it) {
      const Vertex v = *it;
      Vertex candidate = kNoVertex;
      for (Vertex p : g.in(v)) {
        if (idom[p] == kNoVertex) continue;
        candidate = candidate == kNoVertex ? p : intersect(p, candidate);
      }
      if (candidate != idom[v]) {
        idom[v] = candidate;
        changed = true;
      }
    }
  }
  idom[source] = kNoVertex;
  return DomTree::from_parents(source, std::move(idom));
}

BridgeDecomposition bridges_of_flowgraph(const DomTree& tree, const Digraph& g) {
  const std::size_t n = g.num_vertices();
  if (tree.num_vertices() != n) throw PreconditionError("dominator tree does not match graph");
  BridgeDecomposition d;
  d.tree_root.assign(n, kNoVertex);
  d.is_bridge_head.assign(n, false);
  d.bridge_tail.assign(n, kNoVertex);

  for (Vertex v = 0; v < n; ++v) {
    const auto p = tree.parent(v);
    if (!p || !g.has_edge(*p, v)) continue;
    // (d(v), v) is a bridge iff every other reachable predecessor of v is
    // dominated by v.
    bool bridge = true;
    for (Vertex z : g.in(v)) {
      if (z == *p || !tree.reachable(z)) continue;
      if (!tree.is_ancestor(v, z)) {
        bridge = false;
        break;
      }
    }
    if (bridge) {
      d.is_bridge_head[v] = true;
      d.bridge_tail[v] = *p;
      d.bridges.push_back({*p, v});
    }
  }
  std::sort(d.bridges.begin(), d.bridges.end());

  // Preorder walk assigns roots top-down.
  std::vector<Vertex> stack{tree.source()};
  d.tree_root[tree.source()] = tree.source();
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex c : tree.children(v)) {
      d.tree_root[c] = d.is_bridge_head[c] ? c : d.tree_root[v];
      stack.push_back(c);
    }
  }
  return d;
}

}  // namespace reach2
