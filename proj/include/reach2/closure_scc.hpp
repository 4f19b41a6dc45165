#pragma once

#include <optional>
#include <vector>

#include "reach2/bitmatrix.hpp"
#include "reach2/closure_matrix.hpp"
#include "reach2/dominators.hpp"
#include "reach2/graph.hpp"

namespace reach2 {

// Auxiliary graph H of the flow graph G_s: G without the bridges of G_s,
// plus a shortcut (p, y) for every bridge (p, q) and every edge (x, y) with
// x in D(q), y outside D(q). Reachability towards v in H equals reachability
// towards v in G minus the bridge entering v's bridge-decomposition tree.
struct AuxGraph {
  Vertex source = 0;
  BitMatrix h_adjacency;
  BitMatrix h_closure;
  // witness[v] = (d(r_v), r_v); unset for vertices in the source's tree.
  std::vector<std::optional<Edge>> witness;
  DomTree dominators;
  BridgeDecomposition decomposition;
};

// Requires a strongly connected graph; PreconditionError otherwise.
AuxGraph auxiliary_graph(const Digraph& g, Vertex source);

// Closure of a strongly connected graph from the auxiliary graphs of G and
// of its reverse, both rooted at vertex 0. Never produces Bot.
ClosureMatrix closure_scc(const Digraph& g);

}  // namespace reach2
