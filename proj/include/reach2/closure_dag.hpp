#pragma once

#include <span>

#include "reach2/bitmatrix.hpp"
#include "reach2/closure_matrix.hpp"
#include "reach2/graph.hpp"

namespace reach2 {

// Recursion statistics, filled when requested by the closure routines.
struct ClosureStats {
  std::size_t max_depth = 0;
  std::size_t splits = 0;
  std::size_t scc_leaves = 0;
  std::size_t path_products = 0;
};

// Divide-and-conquer closure of a DAG along `order` (a topological
// permutation): halves are closed recursively, recovered to left/right
// canonical form and joined by two path products, right one first. `k` = 0
// selects the width for the graph's own vertex count. Throws
// PreconditionError when `order` is not topological.
ClosureMatrix closure_dag(const Digraph& g, std::span<const Vertex> order, unsigned k = 0,
                          ClosureStats* stats = nullptr,
                          const BoolMultiplier& backend = default_multiplier());

// Convenience overload using the SCC order of an acyclic graph.
ClosureMatrix closure_dag(const Digraph& g);

}  // namespace reach2
