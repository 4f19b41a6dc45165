#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "reach2/closure_dag.hpp"
#include "reach2/error.hpp"
#include "reach2/generators.hpp"
#include "reach2/io.hpp"
#include "reach2/oracle.hpp"

namespace reach2 {
namespace {

ClosureMatrix grid(const std::string& text) {
  std::istringstream in(text);
  return parse_closure(in);
}

TEST(ClosureDag, SingleVertex) {
  const ClosureMatrix c = closure_dag(Digraph(1));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.at(0, 0), TwoReach::top());
}

TEST(ClosureDag, SingleEdge) {
  const ClosureMatrix c = closure_dag(fixtures::make(2, {{0, 1}}));
  EXPECT_EQ(c.at(0, 1), TwoReach::edge(0, 1));
  EXPECT_EQ(c.at(1, 0), TwoReach::bot());
  EXPECT_EQ(c.at(1, 1), TwoReach::top());
}

TEST(ClosureDag, Diamond) {
  const ClosureMatrix c = closure_dag(fixtures::diamond());
  EXPECT_EQ(format_closure_text(c), "T 1>2 1>3 T\nB T B 2>4\nB B T 3>4\nB B B T\n");
}

TEST(ClosureDag, ChainCellIsOneOfItsEdges) {
  const ClosureMatrix c = closure_dag(fixtures::chain3());
  const TwoReach cell = c.at(0, 2);
  EXPECT_TRUE(cell == TwoReach::edge(0, 1) || cell == TwoReach::edge(1, 2));
}

TEST(ClosureDag, RejectsNonTopologicalOrder) {
  const std::vector<Vertex> order{1, 0, 2};
  EXPECT_THROW(closure_dag(fixtures::chain3(), order), PreconditionError);
}

TEST(ClosureDag, RejectsNarrowBitWidth) {
  const Digraph g = gen::random_dag(9, 0.3, 1);
  const SccDecomposition d = scc_decompose(g);
  EXPECT_THROW(closure_dag(g, d.order, 3), PreconditionError);
  EXPECT_NO_THROW(closure_dag(g, d.order, 6));
}

TEST(ClosureDag, ValidOnRandomDags) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 39;
    const Digraph g = gen::random_dag(n, seed % 3 == 0 ? 0.5 : 0.15, seed);
    const ClosureMatrix c = closure_dag(g);
    const auto verdict = oracle::validate_closure(g, c);
    EXPECT_TRUE(verdict.ok) << "seed " << seed << ": " << verdict.message;
  }
}

TEST(ClosureDag, RecursionDepthIsLogarithmic) {
  const Digraph g = gen::random_dag(100, 0.1, 3);
  ClosureStats stats;
  closure_dag(g, scc_decompose(g).order, 0, &stats);
  EXPECT_LE(stats.max_depth, 7u);
  EXPECT_EQ(stats.splits, 99u);
  EXPECT_EQ(stats.path_products, 2 * stats.splits);
}

TEST(Recover, NoEdgeCellsIsIdentity) {
  const ClosureMatrix c = grid("T B T\nT T B\nB B T\n");
  EXPECT_EQ(recover(c, Side::Left).cells(), c.cells());
  EXPECT_EQ(recover(c, Side::Right).cells(), c.cells());
}

TEST(Recover, ChainFirstAndLast) {
  const ClosureMatrix c = closure_dag(fixtures::chain3());
  EXPECT_EQ(recover(c, Side::Left).at(0, 2), TwoReach::edge(0, 1));
  EXPECT_EQ(recover(c, Side::Right).at(0, 2), TwoReach::edge(1, 2));
  EXPECT_EQ(recover(c, Side::Left).flavor(), Flavor::LeftCanonical);
  EXPECT_EQ(recover(c, Side::Right).flavor(), Flavor::RightCanonical);
}

TEST(Recover, TriangleTailRightRowOfA) {
  // A generic closure of the triangle-tail graph; last separators of (a, *)
  // come from the oracle.
  const ClosureMatrix generic = grid("T 1>2 1>2 1>2 1>2\n2>3 T 2>3 T 4>5\n3>1 3>1 T T 4>5\n"
                                 "B B B T 4>5\nB B B B T\n");
  const ClosureMatrix right = recover(generic, Side::Right);
  EXPECT_EQ(format_closure_text(right).substr(0, 18), "T 1>2 2>3 1>2 4>5\n");
  EXPECT_TRUE(oracle::validate_closure(fixtures::triangle_tail(), right).ok);
  EXPECT_TRUE(oracle::validate_closure(fixtures::triangle_tail(), recover(generic, Side::Left)).ok);
}

TEST(Recover, IdempotentAndValidityPreserving) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Digraph g = gen::random_dag(4 + seed, 0.3, seed);
    const ClosureMatrix c = closure_dag(g);
    for (Side side : {Side::Left, Side::Right}) {
      const ClosureMatrix once = recover(c, side);
      EXPECT_EQ(recover(once, side), once);
      EXPECT_TRUE(oracle::validate_closure(g, once).ok) << seed;
    }
  }
}

TEST(Recover, SingleSeparatorCellsAgreeAcrossFlavors) {
  const Digraph g = gen::random_dag(14, 0.2, 77);
  const ClosureMatrix c = closure_dag(g);
  const ClosureMatrix l = recover(c, Side::Left);
  const ClosureMatrix r = recover(c, Side::Right);
  for (Vertex u = 0; u < 14; ++u) {
    for (Vertex v = 0; v < 14; ++v) {
      if (oracle::separators(g, u, v).edges.size() == 1) {
        EXPECT_EQ(c.at(u, v), l.at(u, v));
        EXPECT_EQ(c.at(u, v), r.at(u, v));
      }
    }
  }
}

TEST(Recover, CyclicDependencyIsDetected) {
  // Left reads (0,2) -> (0,1) -> (0,2).
  const ClosureMatrix bad = grid("T 3>2 2>3\nB T B\nB B T\n");
  EXPECT_THROW(recover(bad, Side::Left), InvariantError);
}

TEST(Recover, BotPrefixIsDetected) {
  const ClosureMatrix bad = grid("T 3>2 B\nB T B\nB B T\n");
  EXPECT_THROW(recover(bad, Side::Left), InvariantError);
}

TEST(Query, RangeChecked) {
  const ClosureMatrix c = closure_dag(fixtures::chain3());
  EXPECT_EQ(query(c, 1, 1), TwoReach::top());
  EXPECT_THROW(query(c, 3, 0), QueryError);
}

}  // namespace
}  // namespace reach2
