#include "reach2/applications.hpp"

#include <algorithm>
#include <utility>

#include "reach2/error.hpp"

namespace reach2 {

EdgeDomTree EdgeDomTree::from_labels(Vertex source, std::vector<Vertex> root,
                                     std::vector<Vertex> bridge_tail) {
  const std::size_t n = root.size();
  if (source >= n || bridge_tail.size() != n) throw InvariantError("edge-dominator labels: bad size");
  if (root[source] != source) throw InvariantError("edge-dominator labels: source is not a root");

  EdgeDomTree t;
  t.source_ = source;
  t.parent_.assign(n, kNoVertex);
  std::vector<std::vector<Vertex>> kids(n);
  for (Vertex y = 0; y < n; ++y) {
    const Vertex x = bridge_tail[y];
    if (x == kNoVertex) continue;
    if (y == source || root[y] != y || x >= n || root[x] == kNoVertex) {
      throw InvariantError("edge-dominator labels: bad bridge into " + std::to_string(y + 1));
    }
    t.parent_[y] = root[x];
    kids[root[x]].push_back(y);
  }
  for (Vertex v = 0; v < n; ++v) {
    const Vertex r = root[v];
    if (r == kNoVertex) continue;
    if (r >= n || (r != source && bridge_tail[r] == kNoVertex)) {
      throw InvariantError("edge-dominator labels: vertex " + std::to_string(v + 1) +
                           " points to a non-root");
    }
    ++t.reachable_count_;
  }

  t.descendants_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (root[v] != kNoVertex) ++t.descendants_[root[v]];
  }
  t.in_.assign(n, 0);
  t.out_.assign(n, 0);
  std::uint32_t clock = 0;
  std::size_t visited = 1;
  std::vector<std::pair<Vertex, std::size_t>> frames{{source, 0}};
  t.in_[source] = clock++;
  while (!frames.empty()) {
    auto& [r, pos] = frames.back();
    if (pos < kids[r].size()) {
      const Vertex c = kids[r][pos++];
      t.in_[c] = clock++;
      ++visited;
      frames.push_back({c, 0});
      continue;
    }
    const Vertex done = r;
    t.out_[done] = clock++;
    frames.pop_back();
    if (!frames.empty()) t.descendants_[frames.back().first] += t.descendants_[done];
  }
  const auto roots = static_cast<std::size_t>(
      std::count_if(bridge_tail.begin(), bridge_tail.end(), [](Vertex x) { return x != kNoVertex; }));
  if (visited != roots + 1) throw InvariantError("edge-dominator labels: contracted tree has a cycle");

  t.root_ = std::move(root);
  t.tail_ = std::move(bridge_tail);
  return t;
}

std::optional<Vertex> EdgeDomTree::bridge_tail(Vertex y) const noexcept {
  if (y >= tail_.size() || tail_[y] == kNoVertex) return std::nullopt;
  return tail_[y];
}

std::optional<Vertex> EdgeDomTree::contracted_parent(Vertex y) const noexcept {
  if (y >= parent_.size() || parent_[y] == kNoVertex) return std::nullopt;
  return parent_[y];
}

bool EdgeDomTree::is_bridge(Edge e) const noexcept {
  return e.head < tail_.size() && tail_[e.head] == e.tail && e.tail != kNoVertex;
}

bool EdgeDomTree::on_all_paths(Edge e, Vertex v) const noexcept {
  if (v >= root_.size() || !reachable(v) || !is_bridge(e)) return false;
  return contracted_ancestor(e.head, root_[v]);
}

EdgeDomTree edge_dominator_tree(const ClosureMatrix& right_closure, Vertex source) {
  if (right_closure.flavor() != Flavor::RightCanonical) {
    throw PreconditionError("edge-dominator trees need a right-canonical closure");
  }
  const std::size_t n = right_closure.size();
  if (source >= n) throw QueryError("source out of range");
  std::vector<Vertex> root(n, kNoVertex);
  std::vector<Vertex> tail(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    const TwoReach cell = right_closure.at(source, v);
    if (cell.is_bot()) continue;
    if (cell.is_top()) {
      root[v] = source;
      continue;
    }
    const Edge e = cell.edge();
    if (tail[e.head] != kNoVertex && tail[e.head] != e.tail) {
      throw InvariantError("closure row names two bridges into one vertex");
    }
    tail[e.head] = e.tail;
    root[v] = e.head;
  }
  return EdgeDomTree::from_labels(source, std::move(root), std::move(tail));
}

std::vector<EdgeDomTree> all_edge_dominator_trees(const ClosureMatrix& right_closure) {
  std::vector<EdgeDomTree> out;
  out.reserve(right_closure.size());
  for (Vertex s = 0; s < right_closure.size(); ++s) {
    out.push_back(edge_dominator_tree(right_closure, s));
  }
  return out;
}

EdgeDomTree edge_dominator_tree_direct(const Digraph& g, Vertex source) {
  const DomTree dom = dominator_tree(g, source);
  const BridgeDecomposition bd = bridges_of_flowgraph(dom, g);
  return EdgeDomTree::from_labels(source, bd.tree_root, bd.bridge_tail);
}

std::vector<DomTree> vertex_dominator_trees_from_split(const ClosureMatrix& split_right_closure) {
  if (split_right_closure.flavor() != Flavor::RightCanonical) {
    throw PreconditionError("vertex dominator trees need a right-canonical closure");
  }
  const std::size_t n = split_right_closure.size() / 2;
  if (split_right_closure.size() != 2 * n) throw PreconditionError("not a vertex-split closure");
  std::vector<DomTree> out;
  out.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> parent(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) {
      if (v == s) continue;
      const TwoReach cell =
          split_right_closure.at(SplitGraph::out_copy(s), SplitGraph::in_copy(v));
      if (cell.is_bot()) continue;
      if (cell.is_top()) {
        parent[v] = s;
        continue;
      }
      const Edge e = cell.edge();
      if (!SplitGraph::is_in_copy(e.tail) && e.head != SplitGraph::in_copy(v)) {
        throw InvariantError("split closure: last separator is not adjacent to target");
      }
      parent[v] = SplitGraph::original(e.tail);
    }
    out.push_back(DomTree::from_parents(s, std::move(parent)));
  }
  return out;
}

std::vector<DomTree> all_vertex_dominator_trees(const Digraph& g) {
  const SplitGraph split = split_vertices(g);
  return vertex_dominator_trees_from_split(closure(split.graph, Flavor::RightCanonical));
}

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) throw QueryError("vertex id " + std::to_string(std::uint64_t{v} + 1) + " out of range");
}

}  // namespace

bool avoid_edge_query(std::span<const EdgeDomTree> trees, Vertex s, Vertex t, Edge e) {
  const std::size_t n = trees.size();
  check_vertex(n, s);
  check_vertex(n, t);
  check_vertex(n, e.tail);
  check_vertex(n, e.head);
  const EdgeDomTree& tree = trees[s];
  return tree.reachable(t) && !tree.on_all_paths(e, t);
}

bool avoid_vertex_query(std::span<const DomTree> trees, Vertex s, Vertex t, Vertex w) {
  const std::size_t n = trees.size();
  check_vertex(n, s);
  check_vertex(n, t);
  check_vertex(n, w);
  if (w == s || w == t) throw QueryError("avoided vertex must differ from both endpoints");
  const DomTree& tree = trees[s];
  if (!tree.reachable(t)) return false;
  return !(tree.reachable(w) && tree.is_ancestor(w, t));
}

std::size_t unreachable_count(const EdgeDomTree& tree, Edge e) {
  check_vertex(tree.num_vertices(), e.tail);
  check_vertex(tree.num_vertices(), e.head);
  return tree.is_bridge(e) ? tree.descendants(e.head) : 0;
}

std::size_t unreachable_count(const DomTree& tree, Vertex w) {
  check_vertex(tree.num_vertices(), w);
  if (w == tree.source()) throw QueryError("cannot delete the source");
  return tree.reachable(w) ? tree.subtree_size(w) : 0;
}

bool junction_test(std::span<const DomTree> trees, Vertex s, Vertex u, Vertex v) {
  const std::size_t n = trees.size();
  check_vertex(n, s);
  check_vertex(n, u);
  check_vertex(n, v);
  const DomTree& tree = trees[s];
  if (!tree.reachable(u) || !tree.reachable(v)) return false;
  if (u == s || v == s) return true;
  return tree.top_child(u) != tree.top_child(v);
}

std::vector<Vertex> junctions_report(std::span<const DomTree> trees, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex s = 0; s < trees.size(); ++s) {
    if (junction_test(trees, s, u, v)) out.push_back(s);
  }
  return out;
}

std::uint64_t reachability_function(std::span<const DomTree> trees) {
  std::uint64_t f = 0;
  for (const DomTree& t : trees) f += t.reachable_count() - 1;
  return f;
}

NodeCriticality critical_node(std::span<const DomTree> trees) {
  const std::size_t n = trees.size();
  NodeCriticality report;
  report.value.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t f = 0;
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      f += trees[u].reachable_count() - trees[u].subtree_size(v) - 1;
    }
    report.value[v] = f;
    if (f < report.value[report.best]) report.best = v;
  }
  return report;
}

EdgeCriticality critical_edge(const Digraph& g, std::span<const EdgeDomTree> trees) {
  if (trees.size() != g.num_vertices()) throw PreconditionError("one tree per vertex required");
  EdgeCriticality report;
  report.edges = g.edges();
  report.loss.assign(report.edges.size(), 0);
  std::uint64_t f = 0;
  for (const EdgeDomTree& t : trees) {
    f += t.reachable_count() - 1;
    for (Vertex y = 0; y < t.num_vertices(); ++y) {
      const auto x = t.bridge_tail(y);
      if (!x) continue;
      const auto it = std::lower_bound(report.edges.begin(), report.edges.end(), Edge{*x, y});
      if (it == report.edges.end() || *it != Edge{*x, y}) {
        throw InvariantError("bridge is not an edge of the graph");
      }
      report.loss[static_cast<std::size_t>(it - report.edges.begin())] += t.descendants(y);
    }
  }
  report.value.resize(report.edges.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < report.edges.size(); ++i) {
    report.value[i] = f - report.loss[i];
    if (report.loss[i] > report.loss[best]) best = i;
  }
  if (!report.edges.empty()) report.best = report.edges[best];
  return report;
}

ConnectivityIndex::ConnectivityIndex(Digraph g)
    : graph_(std::move(g)),
      closure_(reach2::closure(graph_)),
      right_(recover(closure_, Side::Right)),
      edge_trees_(all_edge_dominator_trees(right_)),
      vertex_trees_(all_vertex_dominator_trees(graph_)) {}

}  // namespace reach2
