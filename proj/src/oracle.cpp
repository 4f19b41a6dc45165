#include "reach2/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "reach2/error.hpp"

namespace reach2::oracle {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// BFS parents; pred[s] = s.
std::vector<Vertex> bfs_tree(const Digraph& g, Vertex s, std::optional<Edge> banned_edge,
                             std::optional<Vertex> banned_vertex) {
  std::vector<Vertex> pred(g.num_vertices(), kNoVertex);
  pred[s] = s;
  std::deque<Vertex> queue{s};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.out(x)) {
      if (pred[y] != kNoVertex || (banned_vertex && y == *banned_vertex)) continue;
      if (banned_edge && banned_edge->tail == x && banned_edge->head == y) continue;
      pred[y] = x;
      queue.push_back(y);
    }
  }
  return pred;
}

std::vector<Vertex> bfs_path(const Digraph& g, Vertex u, Vertex v) {
  const auto pred = bfs_tree(g, u, std::nullopt, std::nullopt);
  if (pred[v] == kNoVertex) return {};
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(pred[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

void check_pair(const Digraph& g, Vertex u, Vertex v) {
  if (u >= g.num_vertices() || v >= g.num_vertices()) throw QueryError("vertex id out of range");
}

std::string cell_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

}  // namespace

std::vector<bool> reachable(const Digraph& g, Vertex s, std::optional<Edge> banned_edge,
                            std::optional<Vertex> banned_vertex) {
  if (s >= g.num_vertices()) throw QueryError("vertex id out of range");
  const auto pred = bfs_tree(g, s, banned_edge, banned_vertex);
  std::vector<bool> out(pred.size());
  for (std::size_t i = 0; i < pred.size(); ++i) out[i] = pred[i] != kNoVertex;
  return out;
}

SeparatorEntry separators(const Digraph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  SeparatorEntry entry;
  if (u == v) {
    entry.kind = SeparatorEntry::Kind::TwoEdgeReach;
    return entry;
  }
  const auto path = bfs_path(g, u, v);
  if (path.empty()) return entry;
  // Every separator lies on every path, in particular on this one.
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Edge e{path[i], path[i + 1]};
    if (bfs_tree(g, u, e, std::nullopt)[v] == kNoVertex) entry.edges.push_back(e);
  }
  entry.kind = entry.edges.empty() ? SeparatorEntry::Kind::TwoEdgeReach
                                   : SeparatorEntry::Kind::Edges;
  return entry;
}

ClosureMatrix closure(const Digraph& g, Flavor flavor) {
  const std::size_t n = g.num_vertices();
  ClosureMatrix c(n, flavor);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const SeparatorEntry s = separators(g, u, v);
      switch (s.kind) {
        case SeparatorEntry::Kind::Unreachable:
          c.at(u, v) = TwoReach::bot();
          break;
        case SeparatorEntry::Kind::TwoEdgeReach:
          c.at(u, v) = TwoReach::top();
          break;
        case SeparatorEntry::Kind::Edges:
          c.at(u, v) = TwoReach::edge(flavor == Flavor::RightCanonical ? s.edges.back()
                                                                       : s.edges.front());
          break;
      }
    }
  }
  return c;
}

Verdict validate_closure(const Digraph& g, const ClosureMatrix& c) {
  const std::size_t n = g.num_vertices();
  if (c.size() != n) {
    return {false, kNoVertex, kNoVertex, "size mismatch: closure has " +
                                             std::to_string(c.size()) + " rows, graph has " +
                                             std::to_string(n) + " vertices"};
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const SeparatorEntry s = separators(g, u, v);
      const TwoReach cell = c.at(u, v);
      auto fail = [&](const std::string& why) {
        return Verdict{false, u, v, "cell " + cell_name(u, v) + " = " + to_string(cell) + ": " + why};
      };
      switch (s.kind) {
        case SeparatorEntry::Kind::Unreachable:
          if (!cell.is_bot()) return fail("expected B");
          break;
        case SeparatorEntry::Kind::TwoEdgeReach:
          if (!cell.is_top()) return fail("expected T");
          break;
        case SeparatorEntry::Kind::Edges: {
          if (!cell.is_edge()) return fail("expected a separating edge");
          const Edge e = cell.edge();
          if (std::find(s.edges.begin(), s.edges.end(), e) == s.edges.end()) {
            return fail("edge does not separate the pair");
          }
          if (c.flavor() == Flavor::LeftCanonical && e != s.edges.front()) {
            return fail("not the first separator");
          }
          if (c.flavor() == Flavor::RightCanonical && e != s.edges.back()) {
            return fail("not the last separator");
          }
          break;
        }
      }
    }
  }
  return {};
}

VertexSeparatorEntry vertex_separators(const Digraph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  if (u == v) throw PreconditionError("vertex separators need distinct endpoints");
  VertexSeparatorEntry entry;
  const auto path = bfs_path(g, u, v);
  if (path.empty()) return entry;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Edge e{path[i], path[i + 1]};
    if (bfs_tree(g, u, e, std::nullopt)[v] == kNoVertex) {
      entry.sequence.push_back(VertexWitness::cut_edge(e));
    }
    const Vertex w = path[i + 1];
    if (w != v && bfs_tree(g, u, std::nullopt, w)[v] == kNoVertex) {
      entry.vertices.push_back(w);
      entry.sequence.push_back(VertexWitness::cut_vertex(w));
    }
  }
  entry.kind = entry.sequence.empty() ? VertexSeparatorEntry::Kind::TwoVertexReach
                                      : VertexSeparatorEntry::Kind::Separated;
  return entry;
}

Verdict validate_vertex_closure(const Digraph& g, const VertexClosure& c, Flavor flavor) {
  const std::size_t n = g.num_vertices();
  if (c.size() != n) return {false, kNoVertex, kNoVertex, "size mismatch"};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const VertexWitness cell = c.at(u, v);
      auto fail = [&](const std::string& why) {
        return Verdict{false, u, v, "cell " + cell_name(u, v) + " = " + to_string(cell) + ": " + why};
      };
      if (u == v) {
        if (cell != VertexWitness::top()) return fail("diagonal must be T");
        continue;
      }
      const VertexSeparatorEntry s = vertex_separators(g, u, v);
      switch (s.kind) {
        case VertexSeparatorEntry::Kind::Unreachable:
          if (cell != VertexWitness::bot()) return fail("expected B");
          break;
        case VertexSeparatorEntry::Kind::TwoVertexReach:
          if (cell != VertexWitness::top()) return fail("expected T");
          break;
        case VertexSeparatorEntry::Kind::Separated:
          if (std::find(s.sequence.begin(), s.sequence.end(), cell) == s.sequence.end()) {
            return fail("not a separator of the pair");
          }
          if (flavor == Flavor::LeftCanonical && cell != s.sequence.front()) {
            return fail("not the first separator");
          }
          if (flavor == Flavor::RightCanonical && cell != s.sequence.back()) {
            return fail("not the last separator");
          }
          break;
      }
    }
  }
  return {};
}

std::uint64_t reach_pairs(const Digraph& g, std::optional<Vertex> deleted_vertex,
                          std::optional<Edge> deleted_edge) {
  std::uint64_t total = 0;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    if (deleted_vertex && a == *deleted_vertex) continue;
    const auto pred = bfs_tree(g, a, deleted_edge, deleted_vertex);
    for (Vertex b = 0; b < g.num_vertices(); ++b) {
      if (b != a && pred[b] != kNoVertex) ++total;
    }
  }
  return total;
}

std::vector<Vertex> immediate_dominators(const Digraph& g, Vertex source) {
  const std::size_t n = g.num_vertices();
  if (source >= n) throw QueryError("source out of range");
  const auto base = reachable(g, source);
  // dominated_by[w] = vertices that lose reachability when w is deleted.
  std::vector<std::vector<bool>> dominated_by(n);
  for (Vertex w = 0; w < n; ++w) {
    if (w == source || !base[w]) continue;
    const auto after = reachable(g, source, std::nullopt, w);
    dominated_by[w].assign(n, false);
    for (Vertex v = 0; v < n; ++v) dominated_by[w][v] = base[v] && !after[v];
  }
  std::vector<Vertex> idom(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (v == source || !base[v]) continue;
    // Strict dominators form a chain; the deepest one dominates the fewest.
    Vertex best = source;
    std::size_t best_size = n + 1;
    for (Vertex w = 0; w < n; ++w) {
      if (w == v || w == source || dominated_by[w].empty() || !dominated_by[w][v]) continue;
      const auto size = static_cast<std::size_t>(
          std::count(dominated_by[w].begin(), dominated_by[w].end(), true));
      if (size < best_size) {
        best = w;
        best_size = size;
      }
    }
    idom[v] = best;
  }
  return idom;
}

bool is_junction(const Digraph& g, Vertex s, Vertex u, Vertex v) {
  const std::size_t n = g.num_vertices();
  if (s >= n || u >= n || v >= n) throw QueryError("vertex id out of range");
  const auto base = reachable(g, s);
  if (!base[u] || !base[v]) return false;
  if (u == s || v == s) return true;
  if (u == v) return false;

  // Node x splits into 2x (in) and 2x+1 (out); sink is 2n. Capacities are
  // one everywhere except through s.
  const std::size_t sink = 2 * n;
  std::map<std::pair<std::size_t, std::size_t>, int> cap;
  std::vector<std::vector<std::size_t>> adj(2 * n + 1);
  auto add = [&](std::size_t a, std::size_t b, int c) {
    if (cap.find({a, b}) == cap.end() && cap.find({b, a}) == cap.end()) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    cap[{a, b}] += c;
    cap.try_emplace({b, a}, 0);
  };
  for (Vertex x = 0; x < n; ++x) add(2 * x, 2 * x + 1, x == s ? 2 : 1);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : g.out(x)) add(2 * x + 1, 2 * y, 1);
  }
  add(2 * u + 1, sink, 1);
  add(2 * v + 1, sink, 1);

  int flow = 0;
  while (flow < 2) {
    std::vector<std::size_t> pred(2 * n + 1, kNone);
    const std::size_t start = 2 * s;
    pred[start] = start;
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && pred[sink] == kNone) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b : adj[a]) {
        if (pred[b] == kNone && cap[{a, b}] > 0) {
          pred[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (pred[sink] == kNone) break;
    for (std::size_t b = sink; b != start; b = pred[b]) {
      --cap[{pred[b], b}];
      ++cap[{b, pred[b]}];
    }
    ++flow;
  }
  return flow == 2;
}

}  // namespace reach2::oracle
