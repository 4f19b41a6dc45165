#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "reach2/bitmatrix.hpp"
#include "reach2/error.hpp"
#include "reach2/generators.hpp"
#include "reach2/graph.hpp"
#include "reach2/oracle.hpp"

namespace reach2 {
namespace {

Digraph parse(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

TEST(ParseEdgeList, ReadsHeaderAndOneBasedEdges) {
  const Digraph p = parse("5 4\n1 2\n2 3\n3 1\n4 5\n");
  EXPECT_EQ(p.num_vertices(), 5u);
  const std::vector<Edge> expected{{0, 1}, {1, 2}, {2, 0}, {3, 4}};
  EXPECT_EQ(p.edges(), expected);
}

TEST(ParseEdgeList, SingleVertexNoEdges) {
  const Digraph p = parse("1 0\n");
  EXPECT_EQ(p.num_vertices(), 1u);
  EXPECT_EQ(p.num_edges(), 0u);
}

TEST(ParseEdgeList, SelfLoopReportsLine) {
  try {
    parse("2 1\n1 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseEdgeList, RejectsMalformedInput) {
  EXPECT_THROW(parse("0 0\n"), ParseError);
  EXPECT_THROW(parse("3 1\n1 4\n"), ParseError);
  EXPECT_THROW(parse("3 1\n1 x\n"), ParseError);
  EXPECT_THROW(parse("3 2\n1 2\n"), ParseError);
  EXPECT_THROW(parse("3 1\n1 2\n2 3\n"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
}

TEST(ParseEdgeList, RejectsParallelEdges) {
  try {
    parse("3 3\n1 2\n2 3\n1 2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse(R"({"n": 2, "edges": [[1,2],[1,2]]})"), ParseError);
  EXPECT_NO_THROW(parse("2 2\n1 2\n2 1\n"));
}

TEST(ParseGraphJson, MatchesEdgeList) {
  const Digraph p = parse(R"({"n": 5, "edges": [[1,2],[2,3],[3,1],[4,5]]})");
  EXPECT_EQ(p, parse("5 4\n1 2\n2 3\n3 1\n4 5\n"));
  EXPECT_THROW(parse(R"({"n": 2, "edges": [[1,3]]})"), ParseError);
  EXPECT_THROW(parse(R"({"edges": []})"), ParseError);
}

TEST(Digraph, FromEdgesRejectsBadEdges) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Digraph::from_edges(2, loop), PreconditionError);
  const std::vector<Edge> range{{0, 2}};
  EXPECT_THROW(Digraph::from_edges(2, range), PreconditionError);
}

TEST(Digraph, AdjacencyAndReverse) {
  const Digraph g = fixtures::triangle_tail();
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_FALSE(g.has_edge(3, 1));
  const Digraph r = g.reversed();
  EXPECT_TRUE(r.has_edge(3, 1));
  EXPECT_EQ(r.reversed(), g);
  ASSERT_EQ(g.in(3).size(), 2u);
  EXPECT_EQ(g.in(3)[0], 1u);
  EXPECT_EQ(g.in(3)[1], 2u);
}

TEST(Digraph, PermutedAndInducedRange) {
  const Digraph g = fixtures::chain3();
  const std::vector<Vertex> order{2, 0, 1};
  const Digraph p = g.permuted(order);
  // Vertex 0 (a) is now 1, b is 2, c is 0.
  EXPECT_TRUE(p.has_edge(1, 2));
  EXPECT_TRUE(p.has_edge(2, 0));
  const Digraph sub = fixtures::triangle_tail().induced_range(1, 4);
  EXPECT_EQ(sub.num_vertices(), 3u);
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(sub.edges(), expected);
}

TEST(Scc, ThreeCycleIsOneComponent) {
  const SccDecomposition d = scc_decompose(fixtures::make(3, {{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(d.num_components(), 1u);
}

TEST(Scc, EdgelessGraphHasSingletons) {
  EXPECT_EQ(scc_decompose(Digraph(4)).num_components(), 4u);
}

TEST(Scc, TriangleTailComponentsInTopologicalOrder) {
  const SccDecomposition d = scc_decompose(fixtures::triangle_tail());
  ASSERT_EQ(d.num_components(), 3u);
  const std::vector<Vertex> order{0, 1, 2, 3, 4};
  EXPECT_EQ(d.order, order);
  const std::vector<std::uint32_t> start{0, 3, 4, 5};
  EXPECT_EQ(d.comp_start, start);
  EXPECT_TRUE(d.strongly_connected(0, 2));
  EXPECT_FALSE(d.strongly_connected(2, 3));
}

TEST(Scc, CondensationIsAcyclicAndMatchesMutualReachability) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Digraph g = gen::random_digraph(3 + seed % 20, 0.12, seed);
    const SccDecomposition d = scc_decompose(g);
    for (const Edge& e : g.edges()) EXPECT_LE(d.comp_id[e.tail], d.comp_id[e.head]);
    std::vector<std::vector<bool>> reach;
    for (Vertex v = 0; v < g.num_vertices(); ++v) reach.push_back(oracle::reachable(g, v));
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        EXPECT_EQ(d.strongly_connected(u, v), reach[u][v] && reach[v][u]);
      }
    }
    // Blocks are contiguous and ascending inside.
    for (std::size_t c = 0; c < d.num_components(); ++c) {
      for (std::size_t i = d.comp_start[c]; i + 1 < d.comp_start[c + 1]; ++i) {
        EXPECT_LT(d.order[i], d.order[i + 1]);
      }
    }
  }
}

TEST(Scc, DeepChainDoesNotOverflow) {
  std::vector<Edge> edges;
  const std::size_t n = 200000;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({static_cast<Vertex>(n - 1), 0});
  EXPECT_TRUE(is_strongly_connected(Digraph::from_edges(n, edges)));
}

TEST(Predicates, AcyclicAndStronglyConnected) {
  EXPECT_TRUE(is_acyclic(fixtures::diamond()));
  EXPECT_FALSE(is_acyclic(fixtures::triangle_tail()));
  EXPECT_TRUE(is_strongly_connected(fixtures::flow_nine()));
  EXPECT_FALSE(is_strongly_connected(fixtures::diamond()));
}

TEST(ReachableSet, BannedEdgeOnChain) {
  const auto r = reachable_set(fixtures::chain3(), 0, Edge{0, 1});
  EXPECT_EQ(r, (std::vector<bool>{true, false, false}));
}

TEST(ReachableSet, BannedVertexOnDiamond) {
  const auto r = reachable_set(fixtures::diamond(), 0, std::nullopt, Vertex{1});
  EXPECT_EQ(r, (std::vector<bool>{true, false, true, true}));
}

TEST(ReachableSet, BannedSourceIsRejected) {
  EXPECT_THROW(reachable_set(fixtures::diamond(), 0, std::nullopt, Vertex{0}), PreconditionError);
}

TEST(ReachableSet, MatchesTransitiveClosureRows) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Digraph g = gen::random_digraph(64, 0.03, seed);
    BitMatrix adj(64, 64);
    for (const Edge& e : g.edges()) adj.set(e.tail, e.head);
    const BitMatrix tc = transitive_closure(adj);
    for (Vertex s = 0; s < 64; ++s) {
      const auto r = reachable_set(g, s);
      for (Vertex v = 0; v < 64; ++v) EXPECT_EQ(r[v], tc.get(s, v));
    }
  }
}

TEST(SplitVertices, SingleEdge) {
  const SplitGraph s = split_vertices(fixtures::make(2, {{0, 1}}));
  const std::vector<Edge> expected{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(s.graph.edges(), expected);
}

TEST(SplitVertices, EdgelessGraph) {
  const SplitGraph s = split_vertices(Digraph(5));
  EXPECT_EQ(s.graph.num_vertices(), 10u);
  EXPECT_EQ(s.graph.num_edges(), 5u);
}

TEST(SplitVertices, StructureOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Digraph g = gen::random_digraph(12, 0.2, seed);
    const SplitGraph s = split_vertices(g);
    EXPECT_EQ(s.graph.num_edges(), g.num_vertices() + g.num_edges());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      ASSERT_EQ(s.graph.out(SplitGraph::in_copy(v)).size(), 1u);
      EXPECT_EQ(s.graph.out(SplitGraph::in_copy(v))[0], SplitGraph::out_copy(v));
    }
  }
}

TEST(HatGadget, EmptyTwoVertexDag) {
  const HatGadget h = hat_gadget(Digraph(2));
  EXPECT_EQ(h.graph.num_edges(), 5u);
  EXPECT_TRUE(is_strongly_connected(h.graph));
  EXPECT_TRUE(h.graph.has_edge(h.s, h.t));
}

TEST(HatGadget, SingleVertex) {
  const HatGadget h = hat_gadget(Digraph(1));
  EXPECT_EQ(h.graph.num_vertices(), 3u);
  EXPECT_EQ(h.graph.num_edges(), 3u);
  EXPECT_TRUE(is_strongly_connected(h.graph));
}

TEST(HatGadget, RejectsCycles) {
  EXPECT_THROW(hat_gadget(fixtures::triangle_tail()), PreconditionError);
}

}  // namespace
}  // namespace reach2
