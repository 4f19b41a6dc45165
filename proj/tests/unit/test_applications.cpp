#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "reach2/applications.hpp"
#include "reach2/error.hpp"
#include "reach2/generators.hpp"
#include "reach2/oracle.hpp"

namespace reach2 {
namespace {

TEST(EdgeDomTree, Chain) {
  const ConnectivityIndex idx(fixtures::chain3());
  const EdgeDomTree& t = idx.edge_trees()[0];
  EXPECT_EQ(t.root(1), 1u);
  EXPECT_EQ(t.root(2), 2u);
  EXPECT_EQ(t.contracted_parent(1), Vertex{0});
  EXPECT_EQ(t.contracted_parent(2), Vertex{1});
  EXPECT_EQ(t.descendants(1), 2u);
}

TEST(EdgeDomTree, TwoEdgeConnectedGraphHasNoBridges) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 5; ++a) {
    edges.push_back({a, static_cast<Vertex>((a + 1) % 5)});
    edges.push_back({static_cast<Vertex>((a + 1) % 5), a});
  }
  const ConnectivityIndex idx(Digraph::from_edges(5, edges));
  for (const EdgeDomTree& t : idx.edge_trees()) {
    for (Vertex v = 0; v < 5; ++v) {
      EXPECT_EQ(t.root(v), t.source());
      EXPECT_FALSE(t.contracted_parent(v).has_value());
    }
  }
}

TEST(EdgeDomTree, RequiresRightCanonicalClosure) {
  EXPECT_THROW(all_edge_dominator_trees(closure(fixtures::chain3())), PreconditionError);
}

TEST(EdgeDomTree, MatchesDirectConstructionAndBannedEdgeSearch) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Digraph g = gen::random_mixed(3 + seed, 0.12, seed);
    const auto trees = all_edge_dominator_trees(closure(g, Flavor::RightCanonical));
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      EXPECT_EQ(trees[s], edge_dominator_tree_direct(g, s));
      const auto base = oracle::reachable(g, s);
      for (const Edge& e : g.edges()) {
        const auto after = oracle::reachable(g, s, e);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          EXPECT_EQ(trees[s].on_all_paths(e, v), base[v] && !after[v]);
        }
      }
    }
  }
}

TEST(VertexDomTrees, Chain) {
  const auto trees = all_vertex_dominator_trees(fixtures::chain3());
  EXPECT_EQ(trees[0].parent(2), Vertex{1});
  EXPECT_EQ(trees[0].parent(1), Vertex{0});
}

TEST(VertexDomTrees, FlowNineMatchesGolden) {
  const auto trees = all_vertex_dominator_trees(fixtures::flow_nine());
  const std::vector<Vertex> expected{kNoVertex, 0, 0, 0, 3, 4, 5, 5, 6};
  EXPECT_EQ(std::vector<Vertex>(trees[0].parents().begin(), trees[0].parents().end()), expected);
}

TEST(VertexDomTrees, MatchDirectComputation) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Digraph g = gen::random_digraph(2 + seed % 19, 0.15, seed);
    const auto trees = all_vertex_dominator_trees(g);
    for (Vertex s = 0; s < g.num_vertices(); ++s) EXPECT_EQ(trees[s], dominator_tree(g, s));
  }
}

TEST(AvoidEdge, Examples) {
  const ConnectivityIndex chain(fixtures::chain3());
  EXPECT_FALSE(chain.avoid_edge(0, 2, {0, 1}));
  EXPECT_TRUE(chain.avoid_edge(0, 1, {1, 2}));
  EXPECT_FALSE(chain.avoid_edge(2, 0, {0, 1}));
  const ConnectivityIndex diamond(fixtures::diamond());
  EXPECT_TRUE(diamond.avoid_edge(0, 3, {0, 1}));
  EXPECT_THROW(diamond.avoid_edge(0, 4, {0, 1}), QueryError);
}

TEST(AvoidVertex, Examples) {
  const ConnectivityIndex chain(fixtures::chain3());
  EXPECT_FALSE(chain.avoid_vertex(0, 2, 1));
  const ConnectivityIndex diamond(fixtures::diamond());
  EXPECT_TRUE(diamond.avoid_vertex(0, 3, 1));
  EXPECT_THROW(diamond.avoid_vertex(0, 3, 0), QueryError);
  EXPECT_THROW(diamond.avoid_vertex(0, 3, 3), QueryError);
}

TEST(UnreachableCount, Examples) {
  const ConnectivityIndex chain(fixtures::chain3());
  EXPECT_EQ(unreachable_count(chain.edge_trees()[0], Edge{0, 1}), 2u);
  EXPECT_EQ(unreachable_count(chain.vertex_trees()[0], 1), 2u);
  EXPECT_THROW(unreachable_count(chain.vertex_trees()[0], 0), QueryError);
  const ConnectivityIndex diamond(fixtures::diamond());
  EXPECT_EQ(unreachable_count(diamond.edge_trees()[0], Edge{0, 1}), 1u);
  EXPECT_EQ(unreachable_count(diamond.edge_trees()[0], Edge{1, 3}), 0u);
}

TEST(Queries, AgreeWithDeletionSearches) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Digraph g = gen::random_digraph(4 + seed, 0.18, seed + 70);
    const ConnectivityIndex idx(g);
    const std::size_t n = g.num_vertices();
    for (Vertex s = 0; s < n; ++s) {
      const auto base = oracle::reachable(g, s);
      const auto before = static_cast<std::size_t>(std::count(base.begin(), base.end(), true));
      for (const Edge& e : g.edges()) {
        const auto after = oracle::reachable(g, s, e);
        const auto count = static_cast<std::size_t>(std::count(after.begin(), after.end(), true));
        EXPECT_EQ(unreachable_count(idx.edge_trees()[s], e), before - count);
        for (Vertex t = 0; t < n; ++t) EXPECT_EQ(idx.avoid_edge(s, t, e), bool(after[t]));
      }
      for (Vertex w = 0; w < n; ++w) {
        if (w == s) continue;
        const auto after = oracle::reachable(g, s, std::nullopt, w);
        const auto count = static_cast<std::size_t>(std::count(after.begin(), after.end(), true));
        EXPECT_EQ(unreachable_count(idx.vertex_trees()[s], w), before - count);
        for (Vertex t = 0; t < n; ++t) {
          if (t != w && t != s) EXPECT_EQ(idx.avoid_vertex(s, t, w), bool(after[t]));
        }
      }
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) EXPECT_EQ(idx.junction(s, u, v), oracle::is_junction(g, s, u, v));
      }
    }
  }
}

TEST(Junctions, Examples) {
  const ConnectivityIndex diamond(fixtures::diamond());
  EXPECT_TRUE(diamond.junction(0, 1, 2));
  EXPECT_EQ(junctions_report(diamond.vertex_trees(), 1, 2), std::vector<Vertex>{0});
  const ConnectivityIndex chain(fixtures::chain3());
  EXPECT_FALSE(chain.junction(0, 1, 2));
  // b reaches c and trivially itself.
  EXPECT_EQ(junctions_report(chain.vertex_trees(), 1, 2), std::vector<Vertex>{1});
}

TEST(CriticalNode, Examples) {
  const ConnectivityIndex star(fixtures::make(4, {{0, 1}, {0, 2}, {0, 3}}));
  const NodeCriticality s = critical_node(star.vertex_trees());
  EXPECT_EQ(s.value[0], 0u);
  EXPECT_EQ(s.best, 0u);
  const ConnectivityIndex chain(fixtures::chain3());
  const NodeCriticality c = critical_node(chain.vertex_trees());
  EXPECT_EQ(c.value[1], 0u);
  EXPECT_EQ(c.value[0], 1u);
  EXPECT_EQ(c.best, 1u);
  EXPECT_EQ(reachability_function(chain.vertex_trees()), 3u);
}

TEST(CriticalEdge, Examples) {
  const ConnectivityIndex chain(fixtures::chain3());
  const EdgeCriticality c = critical_edge(chain.graph(), chain.edge_trees());
  EXPECT_EQ(c.loss, (std::vector<std::uint64_t>{2, 2}));
  EXPECT_EQ(c.value, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(c.best, (Edge{0, 1}));
  // A 2-cycle pair doubled into a 2-edge-connected component: loss 0.
  const Digraph g = fixtures::make(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  const ConnectivityIndex k3(g);
  for (std::uint64_t loss : critical_edge(g, k3.edge_trees()).loss) EXPECT_EQ(loss, 0u);
}

TEST(Criticality, MatchesRecount) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Digraph g = gen::random_digraph(3 + seed, 0.2, seed + 300);
    const ConnectivityIndex idx(g);
    const NodeCriticality nodes = critical_node(idx.vertex_trees());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      EXPECT_EQ(nodes.value[v], oracle::reach_pairs(g, v));
    }
    const EdgeCriticality edges = critical_edge(g, idx.edge_trees());
    for (std::size_t i = 0; i < edges.edges.size(); ++i) {
      EXPECT_EQ(edges.value[i], oracle::reach_pairs(g, std::nullopt, edges.edges[i]));
    }
  }
}

TEST(EdgeDomTree, FromLabelsRejectsInconsistentInput) {
  // Vertex 2 points at root 1, which has no bridge.
  EXPECT_THROW(EdgeDomTree::from_labels(0, {0, 1, 1}, {kNoVertex, kNoVertex, kNoVertex}),
               InvariantError);
  // Contracted cycle between 1 and 2.
  EXPECT_THROW(EdgeDomTree::from_labels(0, {0, 1, 2}, {kNoVertex, 2, 1}), InvariantError);
}

}  // namespace
}  // namespace reach2
