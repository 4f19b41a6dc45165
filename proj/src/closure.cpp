#include "reach2/closure.hpp"

#include <algorithm>
#include <cstdlib>

#include "closure_internal.hpp"
#include "reach2/closure_scc.hpp"
#include "reach2/error.hpp"

namespace reach2 {

namespace {

struct GeneralSolver {
  const Digraph& g;                        // permuted into SCC order
  const std::vector<std::uint32_t>& comp;  // component of each position
  unsigned k;
  const BoolMultiplier& backend;
  ClosureStats* stats;

  ClosureMatrix solve(Vertex lo, Vertex hi, std::size_t depth) const {
    if (stats != nullptr) stats->max_depth = std::max(stats->max_depth, depth);
    const Vertex n = hi - lo;
    if (n == 1) {
      ClosureMatrix m(1, Flavor::Generic, lo);
      m.at(0, 0) = TwoReach::top();
      return m;
    }
    if (comp[lo] == comp[hi - 1]) {
      if (stats != nullptr) ++stats->scc_leaves;
      return shift(closure_scc(g.induced_range(lo, hi)), lo);
    }
    const Vertex mid = split_point(lo, hi);
    if (mid <= lo || mid >= hi) throw InvariantError("closure: degenerate split");
    if (stats != nullptr) ++stats->splits;
    const ClosureMatrix first = solve(lo, mid, depth + 1);
    const ClosureMatrix second = solve(mid, hi, depth + 1);
    return detail::join_blocks(g, lo, mid, hi, first, second, k, backend, stats);
  }

  // Boundary p (first block [lo, p)) with comp[p - 1] != comp[p], nearest to
  // the middle of the range; ties go to the smaller p.
  Vertex split_point(Vertex lo, Vertex hi) const {
    const long long n = hi - lo;
    Vertex best = lo;
    long long best_gap = -1;
    for (Vertex p = lo + 1; p < hi; ++p) {
      if (comp[p - 1] == comp[p]) continue;
      // Compare |2(p - lo) - n| to avoid halving n.
      const long long gap = std::llabs(2 * static_cast<long long>(p - lo) - n);
      if (best_gap < 0 || gap < best_gap) {
        best = p;
        best_gap = gap;
      }
    }
    return best;
  }

  static ClosureMatrix shift(const ClosureMatrix& local, Vertex lo) {
    ClosureMatrix out(local.size(), Flavor::Generic, lo);
    for (std::size_t i = 0; i < local.size(); ++i) {
      for (std::size_t j = 0; j < local.size(); ++j) {
        TwoReach cell = local.at(i, j);
        if (cell.is_edge()) cell = TwoReach::edge(cell.edge().tail + lo, cell.edge().head + lo);
        out.at(i, j) = cell;
      }
    }
    return out;
  }
};

}  // namespace

ClosureMatrix closure(const Digraph& g, ClosureStats* stats, const BoolMultiplier& backend) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw PreconditionError("closure: empty graph");
  const SccDecomposition scc = scc_decompose(g);
  const Digraph permuted = g.permuted(scc.order);
  std::vector<std::uint32_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = scc.comp_id[scc.order[i]];
  const GeneralSolver solver{permuted, comp, bit_width_for(n), backend, stats};
  return detail::unpermute(solver.solve(0, static_cast<Vertex>(n), 0), scc.order);
}

ClosureMatrix closure(const Digraph& g, Flavor flavor) {
  ClosureMatrix c = closure(g);
  switch (flavor) {
    case Flavor::Generic:
      return c;
    case Flavor::LeftCanonical:
      return recover(c, Side::Left);
    case Flavor::RightCanonical:
      return recover(c, Side::Right);
  }
  return c;
}

std::string to_string(VertexWitness w) {
  switch (w.kind()) {
    case VertexWitness::Kind::Top:
      return "T";
    case VertexWitness::Kind::Bot:
      return "B";
    case VertexWitness::Kind::CutVertex:
      return "CUTV:" + std::to_string(w.vertex() + 1);
    case VertexWitness::Kind::CutEdge:
      break;
  }
  return "CUTE:" + std::to_string(w.edge().tail + 1) + ">" + std::to_string(w.edge().head + 1);
}

VertexClosure two_vertex_closure(const Digraph& g, Flavor flavor) {
  const std::size_t n = g.num_vertices();
  const SplitGraph split = split_vertices(g);
  const ClosureMatrix c = closure(split.graph, flavor);
  VertexClosure out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) {
        out.at(u, v) = VertexWitness::top();
        continue;
      }
      const TwoReach cell = c.at(SplitGraph::out_copy(u), SplitGraph::in_copy(v));
      if (cell.is_top()) {
        out.at(u, v) = VertexWitness::top();
      } else if (cell.is_bot()) {
        out.at(u, v) = VertexWitness::bot();
      } else {
        const Edge e = cell.edge();
        const Vertex x = SplitGraph::original(e.tail);
        const Vertex y = SplitGraph::original(e.head);
        if (SplitGraph::is_in_copy(e.tail)) {
          if (x == u || x == v) throw InvariantError("two_vertex_closure: endpoint as cut vertex");
          out.at(u, v) = VertexWitness::cut_vertex(x);
        } else if (flavor == Flavor::Generic && x != u) {
          // Any interior endpoint of a separating edge is itself a cut vertex.
          out.at(u, v) = VertexWitness::cut_vertex(x);
        } else if (flavor == Flavor::Generic && y != v) {
          out.at(u, v) = VertexWitness::cut_vertex(y);
        } else {
          out.at(u, v) = VertexWitness::cut_edge({x, y});
        }
      }
    }
  }
  return out;
}

}  // namespace reach2
