#include "reach2/closure_scc.hpp"

#include <utility>

#include "reach2/error.hpp"

namespace reach2 {

AuxGraph auxiliary_graph(const Digraph& g, Vertex source) {
  const std::size_t n = g.num_vertices();
  if (source >= n) throw PreconditionError("auxiliary graph source out of range");
  if (!is_strongly_connected(g)) {
    throw PreconditionError("auxiliary graph requires a strongly connected graph");
  }
  AuxGraph aux;
  aux.source = source;
  aux.dominators = dominator_tree(g, source);
  aux.decomposition = bridges_of_flowgraph(aux.dominators, g);
  const DomTree& dom = aux.dominators;
  const BridgeDecomposition& bd = aux.decomposition;

  BitMatrix h(n, n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : g.out(x)) h.set(x, y);
  }
  for (const Edge& b : bd.bridges) h.set(b.tail, b.head, false);

  // Members of each bridge-decomposition tree, and the roots in an order
  // where every root follows all roots below it.
  std::vector<std::vector<Vertex>> members(n);
  std::vector<Vertex> preorder;
  preorder.reserve(n);
  std::vector<Vertex> stack{source};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    members[bd.tree_root[v]].push_back(v);
    const auto kids = dom.children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }

  // D(r) and R(r) as bit rows: R(r) = heads of edges leaving D(r).
  BitMatrix descendants(n, n);
  BitMatrix escapes(n, n);
  aux.witness.assign(n, std::nullopt);
  for (auto it = preorder.rbegin(); it != preorder.rend(); ++it) {
    const Vertex r = *it;
    if (bd.tree_root[r] != r) continue;
    auto d_row = descendants.row(r);
    auto r_row = escapes.row(r);
    for (Vertex x : members[r]) {
      descendants.set(r, x);
      for (Vertex y : g.out(x)) escapes.set(r, y);
      for (Vertex c : dom.children(x)) {
        if (!bd.is_bridge_head[c]) continue;
        const auto cd = descendants.row(c);
        const auto cr = escapes.row(c);
        for (std::size_t w = 0; w < d_row.size(); ++w) {
          d_row[w] |= cd[w];
          r_row[w] |= cr[w];
        }
      }
    }
    for (std::size_t w = 0; w < r_row.size(); ++w) r_row[w] &= ~d_row[w];
    if (r == source) continue;
    const Vertex p = bd.bridge_tail[r];
    auto h_row = h.row(p);
    for (std::size_t w = 0; w < r_row.size(); ++w) h_row[w] |= r_row[w];
    for (Vertex x : members[r]) aux.witness[x] = Edge{p, r};
  }

  aux.h_closure = transitive_closure(h);
  aux.h_adjacency = std::move(h);
  return aux;
}

ClosureMatrix closure_scc(const Digraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw PreconditionError("closure_scc: empty graph");
  if (n == 1) {
    ClosureMatrix single(1, Flavor::Generic);
    single.at(0, 0) = TwoReach::top();
    return single;
  }
  const AuxGraph forward = auxiliary_graph(g, 0);
  const AuxGraph backward = auxiliary_graph(g.reversed(), 0);

  ClosureMatrix out(n, Flavor::Generic);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (!forward.h_closure.get(i, j)) {
        if (!forward.witness[j]) {
          throw InvariantError("closure_scc: H separates a pair without a witness");
        }
        out.at(i, j) = TwoReach::edge(*forward.witness[j]);
      } else if (!backward.h_closure.get(j, i)) {
        if (!backward.witness[i]) {
          throw InvariantError("closure_scc: H' separates a pair without a witness");
        }
        out.at(i, j) = TwoReach::edge(backward.witness[i]->reversed());
      } else {
        out.at(i, j) = TwoReach::top();
      }
    }
  }
  return out;
}

}  // namespace reach2
