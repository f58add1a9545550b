#include <gtest/gtest.h>

#include "apnp/oracle.hpp"
#include "apnp/tie_reduction.hpp"
#include "apnp/verify.hpp"
#include "support/brute.hpp"

namespace apnp {
namespace {

using testing::graph_from;

// Lift of the reduced graph's exact (distinct-weight) answer.
ApnpMatrix reduce_and_solve(const Graph& g) {
  const Reduction red = reduce(g);
  EXPECT_TRUE(red.graph.has_distinct_weights());
  EXPECT_LE(red.graph.m(), 2 * g.m());
  ApnpMatrix h = red.graph.directed() ? sweep_apnp(rank_weights(red.graph)) : undirected_basic(red.graph);
  return lift_answers(h, red.graph, red.map);
}

std::vector<std::pair<VertexId, VertexId>> pairs_by_weight(const Graph& g) {
  std::vector<Edge> es(g.edges().begin(), g.edges().end());
  std::sort(es.begin(), es.end(), [](const Edge& a, const Edge& b) { return a.weight < b.weight; });
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& e : es) out.emplace_back(e.src, e.dst);
  return out;
}

TEST(ReduceUndirected, TriangleEmitsStarOutThenBack) {
  const Graph g = graph_from(3, false, {{0, 1, 5}, {1, 2, 5}, {0, 2, 5}});
  const Reduction red = reduce_undirected(g);
  ASSERT_EQ(red.graph.m(), 4U);
  const std::vector<std::pair<VertexId, VertexId>> expect{{0, 1}, {0, 2}, {2, 0}, {1, 0}};
  EXPECT_EQ(pairs_by_weight(red.graph), expect);
  ASSERT_EQ(red.map.classes.size(), 1U);
  EXPECT_EQ(red.map.classes[0].assembly, std::vector<VertexId>{0});
}

TEST(ReduceUndirected, SingleEdgeBecomesTwo) {
  const Graph g = graph_from(2, false, {{1, 0, 3}});
  const Reduction red = reduce_undirected(g);
  const std::vector<std::pair<VertexId, VertexId>> expect{{0, 1}, {1, 0}};
  EXPECT_EQ(pairs_by_weight(red.graph), expect);
}

TEST(ReduceUndirected, LiftedTriangleConnectsEverything) {
  const Graph g = graph_from(3, false, {{0, 1, 5}, {1, 2, 5}, {0, 2, 5}});
  const ApnpMatrix r = reduce_and_solve(g);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) EXPECT_EQ(r.opt(i, k), 5) << i << "," << k;
  }
}

TEST(ReduceDirected, TwoCycle) {
  const Graph g = graph_from(2, true, {{0, 1, 7}, {1, 0, 7}});
  const Reduction red = reduce_directed(g);
  const std::vector<std::pair<VertexId, VertexId>> expect{{1, 0}, {0, 1}};
  EXPECT_EQ(pairs_by_weight(red.graph), expect);
  const ApnpMatrix r = reduce_and_solve(g);
  EXPECT_EQ(r.opt(0, 1), 7);
  EXPECT_EQ(r.opt(1, 0), 7);
  // Both vertices lie on a 7-cycle, including the assembly vertex.
  EXPECT_EQ(r.opt(0, 0), 7);
  EXPECT_EQ(r.opt(1, 1), 7);
}

TEST(ReduceDirected, LoneEdgeIsReemitted) {
  const Graph g = graph_from(2, true, {{0, 1, 3}});
  const Reduction red = reduce_directed(g);
  ASSERT_EQ(red.graph.m(), 1U);
  EXPECT_EQ(red.graph.edge(0).src, 0);
  EXPECT_EQ(red.graph.edge(0).dst, 1);
  EXPECT_EQ(red.map.new_to_old_weight.at(red.graph.edge(0).weight), 3);
}

TEST(ReduceDirected, ChainKeepsTopologicalOrder) {
  const Graph g = graph_from(3, true, {{1, 2, 4}, {0, 1, 4}});
  const Reduction red = reduce_directed(g);
  const std::vector<std::pair<VertexId, VertexId>> expect{{0, 1}, {1, 2}};
  EXPECT_EQ(pairs_by_weight(red.graph), expect);
  EXPECT_EQ(reduce_and_solve(g).opt(0, 2), 4);
}

TEST(LiftAnswers, EmptyMatrix) {
  const Graph g(3, true);
  const Reduction red = reduce(g);
  EXPECT_EQ(lift_answers(ApnpMatrix(3), red.graph, red.map), ApnpMatrix(3));
}

TEST(LiftAnswers, TwoClassesMapBack) {
  const Graph g = graph_from(4, true, {{0, 1, 5}, {1, 2, 5}, {2, 3, 9}, {3, 0, 9}, {1, 3, 5}});
  const ApnpMatrix r = reduce_and_solve(g);
  EXPECT_EQ(compare_weights(r, testing::edge_state_apnp(g)), "");
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      if (auto w = r.opt(i, k)) EXPECT_TRUE(*w == 5 || *w == 9);
    }
  }
}

TEST(LiftAnswers, UnknownSyntheticWeightThrows) {
  const Graph g = graph_from(2, true, {{0, 1, 3}});
  const Reduction red = reduce(g);
  ApnpMatrix bogus(2);
  bogus.set(0, 1, 12345, 0);
  EXPECT_THROW(lift_answers(bogus, red.graph, red.map), std::out_of_range);
}

TEST(DedupeParallelMin, KeepsLightest) {
  const Graph g = graph_from(3, true, {{0, 1, 5}, {0, 1, 9}, {0, 1, 2}, {1, 2, 7}}, true);
  const RankedGraph rg = rank_weights(g);
  const std::vector<Code> all{0, 1, 2, 3};
  const std::vector<Code> kept = dedupe_parallel_min(rg, all);
  ASSERT_EQ(kept.size(), 2U);
  EXPECT_EQ(rg.weight_of(kept[0]), 2);
  EXPECT_EQ(rg.weight_of(kept[1]), 7);
  const std::vector<Code> distinct{0, 2};
  EXPECT_EQ(dedupe_parallel_min(rg, distinct), distinct);
}

TEST(TieReduction, SyntheticSlotsStayInsideTheirClass) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_tied_graph(rng, 2 + static_cast<int>(rng.below(10)), trial % 2 == 0, 0.5, 3);
    const Reduction red = reduce(g);
    for (const auto& cls : red.map.classes) {
      for (const auto& [syn, old] : red.map.new_to_old_weight) {
        const bool inside = syn >= cls.first_slot && syn < cls.first_slot + static_cast<Weight>(2 * cls.edge_count);
        EXPECT_EQ(inside, old == cls.weight);
      }
    }
  }
}

TEST(TieReduction, MatchesBruteForceOnRandomTies) {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const bool directed = trial % 2 == 0;
    const Graph g = testing::random_tied_graph(rng, 1 + static_cast<int>(rng.below(12)), directed,
                                               0.1 + 0.6 * rng.unit(), 1 + static_cast<int>(rng.below(3)));
    const ApnpMatrix truth = testing::edge_state_apnp(g);
    const ApnpMatrix r = reduce_and_solve(g);
    ASSERT_EQ(compare_weights(r, truth), "") << write_graph(g);
    ASSERT_EQ(check_last_edges(r, g, truth), "") << write_graph(g);
  }
}

}  // namespace
}  // namespace apnp
