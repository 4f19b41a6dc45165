#pragma once

#include <span>

#include "reach2/bitmatrix.hpp"
#include "reach2/closure_dag.hpp"
#include "reach2/closure_matrix.hpp"
#include "reach2/graph.hpp"

namespace reach2::detail {

// Joins the closures of blocks [lo, mid) and [mid, hi) of `g` into the
// closure of [lo, hi); requires no edge from the second block to the first.
ClosureMatrix join_blocks(const Digraph& g, Vertex lo, Vertex mid, Vertex hi,
                          const ClosureMatrix& first, const ClosureMatrix& second, unsigned k,
                          const BoolMultiplier& backend, ClosureStats* stats);

// Translates a closure computed on g.permuted(order) back to g's ids.
ClosureMatrix unpermute(const ClosureMatrix& permuted, std::span<const Vertex> order);

}  // namespace reach2::detail
