#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "reach2/dominators.hpp"
#include "reach2/error.hpp"
#include "reach2/generators.hpp"
#include "reach2/oracle.hpp"

namespace reach2 {
namespace {

TEST(DominatorTree, Chain) {
  const DomTree t = dominator_tree(fixtures::chain3(), 0);
  EXPECT_EQ(t.parent(1), Vertex{0});
  EXPECT_EQ(t.parent(2), Vertex{1});
  EXPECT_FALSE(t.parent(0).has_value());
  EXPECT_EQ(t.subtree_size(1), 2u);
  EXPECT_EQ(t.reachable_count(), 3u);
}

TEST(DominatorTree, FlowNineGolden) {
  // Oracle-derived: a, b, c hang off s; then c <- d <- e <- {f, g}; h <- f.
  const DomTree t = dominator_tree(fixtures::flow_nine(), 0);
  const std::vector<Vertex> expected{kNoVertex, 0, 0, 0, 3, 4, 5, 5, 6};
  EXPECT_EQ(std::vector<Vertex>(t.parents().begin(), t.parents().end()), expected);
  EXPECT_EQ(t.top_child(8), 3u);
  EXPECT_EQ(t.top_child(0), kNoVertex);
}

TEST(DominatorTree, UnreachableVertices) {
  const DomTree t = dominator_tree(fixtures::make(4, {{0, 1}, {2, 3}}), 0);
  EXPECT_FALSE(t.reachable(2));
  EXPECT_EQ(t.subtree_size(3), 0u);
  EXPECT_THROW(t.is_ancestor(0, 2), QueryError);
  EXPECT_THROW(t.is_ancestor(0, 9), QueryError);
  EXPECT_EQ(t.reachable_count(), 2u);
}

TEST(DominatorTree, MatchesDeletionOracle) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph g = gen::random_digraph(5 + seed % 26, 0.12, seed);
    for (Vertex s = 0; s < g.num_vertices(); s += 3) {
      const DomTree t = dominator_tree(g, s);
      EXPECT_EQ(t, DomTree::from_parents(s, oracle::immediate_dominators(g, s))) << seed;
      // Removing the parent of v disconnects v.
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto p = t.parent(v);
        if (!p || *p == s) continue;
        EXPECT_FALSE(oracle::reachable(g, s, std::nullopt, *p)[v]);
      }
      EXPECT_EQ(t.subtree_size(s), t.reachable_count());
    }
  }
}

TEST(DominatorTree, AncestorMatchesParentWalk) {
  const Digraph g = gen::random_digraph(30, 0.08, 99);
  const DomTree t = dominator_tree(g, 0);
  for (Vertex u = 0; u < 30; ++u) {
    for (Vertex v = 0; v < 30; ++v) {
      if (!t.reachable(u) || !t.reachable(v)) continue;
      bool walk = false;
      for (std::optional<Vertex> x = v; x; x = t.parent(*x)) {
        if (*x == u) walk = true;
      }
      EXPECT_EQ(is_ancestor(t, u, v), walk);
    }
  }
}

TEST(DomTree, FromParentsRejectsCycles) {
  EXPECT_THROW(DomTree::from_parents(0, {kNoVertex, 2, 1}), InvariantError);
  EXPECT_THROW(DomTree::from_parents(0, {1, 0}), InvariantError);
}

TEST(Bridges, Chain) {
  const Digraph g = fixtures::chain3();
  const BridgeDecomposition b = bridges_of_flowgraph(dominator_tree(g, 0), g);
  const std::vector<Edge> expected{{0, 1}, {1, 2}};
  EXPECT_EQ(b.bridges, expected);
  EXPECT_EQ(b.tree_root[2], 2u);
  EXPECT_TRUE(b.is_bridge({1, 2}));
}

TEST(Bridges, FlowNineGolden) {
  const Digraph g = fixtures::flow_nine();
  const BridgeDecomposition b = bridges_of_flowgraph(dominator_tree(g, 0), g);
  // s->a, c->d, d->e, e->f, e->g, f->h (oracle: deleting each cuts its head).
  const std::vector<Edge> expected{{0, 1}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 8}};
  EXPECT_EQ(b.bridges, expected);
  EXPECT_EQ(b.tree_root[2], 0u);
  EXPECT_EQ(b.tree_root[3], 0u);
  EXPECT_EQ(b.tree_root[8], 8u);
}

TEST(Bridges, MatchBannedEdgeSearch) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph g = gen::random_digraph(4 + seed % 20, 0.15, seed + 500);
    const DomTree t = dominator_tree(g, 0);
    const BridgeDecomposition b = bridges_of_flowgraph(t, g);
    const auto base = oracle::reachable(g, 0);
    for (const Edge& e : g.edges()) {
      const bool cut = base[e.head] && !oracle::reachable(g, 0, e)[e.head];
      EXPECT_EQ(b.is_bridge(e), cut) << seed;
    }
  }
}

TEST(Bridges, StrongBridgeCharacterisation) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Digraph g = gen::random_strongly_connected(3 + seed % 23, 0.05, seed);
    const Digraph r = g.reversed();
    const auto fb = bridges_of_flowgraph(dominator_tree(g, 0), g);
    const auto rb = bridges_of_flowgraph(dominator_tree(r, 0), r);
    std::size_t strong = 0;
    for (const Edge& e : g.edges()) {
      const std::vector<Edge> rest = [&] {
        std::vector<Edge> out;
        for (const Edge& f : g.edges()) {
          if (f != e) out.push_back(f);
        }
        return out;
      }();
      const bool breaks = !is_strongly_connected(Digraph::from_edges(g.num_vertices(), rest));
      EXPECT_EQ(breaks, fb.is_bridge(e) || rb.is_bridge(e.reversed())) << seed;
      strong += breaks;
    }
    EXPECT_LE(strong, 2 * g.num_vertices() - 2);
  }
}

TEST(Bridges, BridgeLiesOnEveryPathIntoItsSubtree) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Digraph g = gen::random_strongly_connected(12, 0.06, seed + 40);
    const DomTree t = dominator_tree(g, 0);
    const auto b = bridges_of_flowgraph(t, g);
    for (const Edge& br : b.bridges) {
      for (Vertex w = 0; w < g.num_vertices(); ++w) {
        if (t.is_ancestor(br.head, w)) continue;
        const auto after = oracle::reachable(g, w, br);
        for (Vertex x = 0; x < g.num_vertices(); ++x) {
          if (t.is_ancestor(br.head, x)) EXPECT_FALSE(after[x]);
        }
      }
    }
  }
}

}  // namespace
}  // namespace reach2
