#pragma once

#include <string>
#include <vector>

#include "reach2/graph.hpp"

namespace reach2::fixtures {

inline Digraph make(std::size_t n, std::vector<Edge> edges) {
  return Digraph::from_edges(n, edges);
}

// a..e = 0..4: cycle a->b->c->a, then b->d, c->d, d->e.
inline Digraph triangle_tail() { return make(5, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 3}, {3, 4}}); }

// a->b->c
inline Digraph chain3() { return make(3, {{0, 1}, {1, 2}}); }

// a->b->d, a->c->d with a, b, c, d = 0..3
inline Digraph diamond() { return make(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }

// Strongly connected flow graph, s a b c d e f g h = 0..8.
inline Digraph flow_nine() {
  return make(9, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 2}, {4, 5}, {5, 6}, {5, 7}, {7, 3},
                  {6, 8}, {8, 0}});
}

// Ordered pair of distinct vertices helper for loops.
inline std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) out.push_back({u, v});
  }
  return out;
}

}  // namespace reach2::fixtures
