#include "reach2/closure_dag.hpp"

#include <algorithm>

#include "closure_internal.hpp"
#include "reach2/error.hpp"

namespace reach2 {

namespace detail {

ClosureMatrix join_blocks(const Digraph& g, Vertex lo, Vertex mid, Vertex hi,
                          const ClosureMatrix& first, const ClosureMatrix& second, unsigned k,
                          const BoolMultiplier& backend, ClosureStats* stats) {
  const std::size_t n1 = mid - lo;
  const std::size_t n2 = hi - mid;
  const ClosureMatrix a = recover(first, Side::Left);
  const ClosureMatrix c = recover(second, Side::Right);

  // Edges crossing the split, labelled with their global ids.
  TwoReachMatrix crossing(n1, n2);
  for (Vertex u = lo; u < mid; ++u) {
    const auto adj = g.out(u);
    for (auto it = std::lower_bound(adj.begin(), adj.end(), mid);
         it != adj.end() && *it < hi; ++it) {
      crossing(u - lo, *it - mid) = TwoReach::edge(u, *it);
    }
  }
  const TwoReachMatrix tail = path_product(crossing, c.cells(), k, backend);
  const TwoReachMatrix upper_right = path_product(a.cells(), tail, k, backend);
  if (stats != nullptr) stats->path_products += 2;

  ClosureMatrix out(n1 + n2, Flavor::Generic, lo);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < n2; ++j) out.at(i, n1 + j) = upper_right(i, j);
  }
  for (std::size_t i = 0; i < n2; ++i) {
    for (std::size_t j = 0; j < n2; ++j) out.at(n1 + i, n1 + j) = c.at(i, j);
  }
  return out;
}

ClosureMatrix unpermute(const ClosureMatrix& permuted, std::span<const Vertex> order) {
  const std::size_t n = permuted.size();
  ClosureMatrix out(n, permuted.flavor());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      TwoReach cell = permuted.at(i, j);
      if (cell.is_edge()) cell = TwoReach::edge(order[cell.edge().tail], order[cell.edge().head]);
      out.at(order[i], order[j]) = cell;
    }
  }
  return out;
}

}  // namespace detail

namespace {

ClosureMatrix single_vertex(Vertex origin) {
  ClosureMatrix m(1, Flavor::Generic, origin);
  m.at(0, 0) = TwoReach::top();
  return m;
}

ClosureMatrix solve_dag(const Digraph& g, Vertex lo, Vertex hi, unsigned k,
                        const BoolMultiplier& backend, ClosureStats* stats, std::size_t depth) {
  if (stats != nullptr) stats->max_depth = std::max(stats->max_depth, depth);
  if (hi - lo == 1) return single_vertex(lo);
  const Vertex mid = lo + (hi - lo) / 2;
  if (stats != nullptr) ++stats->splits;
  const ClosureMatrix first = solve_dag(g, lo, mid, k, backend, stats, depth + 1);
  const ClosureMatrix second = solve_dag(g, mid, hi, k, backend, stats, depth + 1);
  return detail::join_blocks(g, lo, mid, hi, first, second, k, backend, stats);
}

}  // namespace

ClosureMatrix closure_dag(const Digraph& g, std::span<const Vertex> order, unsigned k,
                          ClosureStats* stats, const BoolMultiplier& backend) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw PreconditionError("closure_dag: empty graph");
  const unsigned needed = bit_width_for(n);
  if (k == 0) k = needed;
  if (k < needed) throw PreconditionError("closure_dag: bit width too small for graph");
  const Digraph permuted = g.permuted(order);
  for (const Edge& e : permuted.edges()) {
    if (e.tail >= e.head) throw PreconditionError("closure_dag: order is not topological");
  }
  const ClosureMatrix result = solve_dag(permuted, 0, static_cast<Vertex>(n), k, backend, stats, 0);
  return detail::unpermute(result, order);
}

ClosureMatrix closure_dag(const Digraph& g) {
  const SccDecomposition scc = scc_decompose(g);
  return closure_dag(g, scc.order);
}

}  // namespace reach2
