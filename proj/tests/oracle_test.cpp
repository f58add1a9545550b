#include <gtest/gtest.h>

#include "apnp/oracle.hpp"
#include "apnp/verify.hpp"
#include "support/brute.hpp"

namespace apnp {
namespace {

using testing::graph_from;

TEST(NaiveApnp, Triangle) {
  const Graph g = graph_from(3, true, {{0, 1, 1}, {1, 2, 2}, {0, 2, 5}});
  const ApnpMatrix r = naive_apnp(rank_weights(g));
  EXPECT_EQ(r.opt(0, 1), 1);
  EXPECT_EQ(r.opt(0, 2), 2);
  EXPECT_EQ(r.opt(1, 2), 2);
  EXPECT_EQ(r.entries(), 3U);
  EXPECT_EQ(r.last_edge(0, 2), 1);
}

TEST(NaiveApnp, DecreasingChainIsBlocked) {
  const Graph g = graph_from(3, true, {{0, 1, 5}, {1, 2, 2}});
  const ApnpMatrix r = naive_apnp(rank_weights(g));
  EXPECT_FALSE(r.opt(0, 2));
  EXPECT_EQ(r.entries(), 2U);
}

TEST(NaiveApnp, SingleEdge) {
  const Graph g = graph_from(3, true, {{2, 0, 8}});
  const ApnpMatrix r = naive_apnp(rank_weights(g));
  EXPECT_EQ(r.entries(), 1U);
  EXPECT_EQ(r.opt(2, 0), 8);
}

TEST(SweepApnp, AgreesOnTriangle) {
  const RankedGraph rg = rank_weights(graph_from(3, true, {{0, 1, 1}, {1, 2, 2}, {0, 2, 5}}));
  EXPECT_EQ(sweep_apnp(rg), naive_apnp(rg));
}

TEST(SweepApnp, TwoCycleDiagonal) {
  const ApnpMatrix r = sweep_apnp(rank_weights(graph_from(2, true, {{0, 1, 1}, {1, 0, 2}})));
  EXPECT_EQ(r.opt(0, 0), 2);
  EXPECT_EQ(r.opt(0, 1), 1);
  EXPECT_EQ(r.opt(1, 0), 2);
  EXPECT_FALSE(r.opt(1, 1));
}

TEST(SweepApnp, IsolatedVertices) {
  EXPECT_EQ(sweep_apnp(rank_weights(Graph(5, true))).entries(), 0U);
}

TEST(UndirectedBasic, PathOneDirectionOnly) {
  const ApnpMatrix r = undirected_basic(graph_from(3, false, {{0, 1, 1}, {1, 2, 3}}));
  EXPECT_EQ(r.opt(0, 1), 1);
  EXPECT_EQ(r.opt(1, 0), 1);
  EXPECT_EQ(r.opt(0, 2), 3);
  EXPECT_EQ(r.opt(1, 2), 3);
  EXPECT_EQ(r.opt(2, 1), 3);
  EXPECT_FALSE(r.opt(2, 0));
}

TEST(UndirectedBasic, SingleEdgeBothWays) {
  const ApnpMatrix r = undirected_basic(graph_from(2, false, {{0, 1, 6}}));
  EXPECT_EQ(r.opt(0, 1), 6);
  EXPECT_EQ(r.opt(1, 0), 6);
  // Out and back along the edge.
  EXPECT_EQ(r.opt(0, 0), 6);
}

TEST(UndirectedBasic, TriangleTakesTheCheaperRoute) {
  const ApnpMatrix r = undirected_basic(graph_from(3, false, {{0, 1, 1}, {1, 2, 2}, {0, 2, 3}}));
  EXPECT_EQ(r.opt(0, 2), 2);
}

TEST(UndirectedBasic, RejectsBadInput) {
  EXPECT_THROW(undirected_basic(graph_from(2, true, {{0, 1, 1}})), std::invalid_argument);
  EXPECT_THROW(undirected_basic(graph_from(3, false, {{0, 1, 1}, {1, 2, 1}})), std::invalid_argument);
}

TEST(BucketQueue, MovesAndDrains) {
  BucketQueue q(4, 5);
  q.push(0, 3);
  q.push(1, 3);
  q.push(0, 1);
  EXPECT_EQ(q.size(), 2U);
  std::vector<std::uint32_t> out;
  q.take(1, out);
  EXPECT_EQ(out, std::vector<std::uint32_t>{0});
  EXPECT_THROW(q.push(2, 1), std::logic_error);
  q.take(3, out);
  EXPECT_EQ(out, std::vector<std::uint32_t>{1});
  EXPECT_EQ(q.size(), 0U);
}

TEST(Oracles, NaiveEqualsSweepOnRandomDigraphs) {
  Rng rng(2024);
  constexpr double kDensity[] = {0.0, 0.1, 0.5, 1.0};
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + static_cast<int>(rng.below(40)), true, kDensity[trial % 4]);
    const RankedGraph rg = rank_weights(g);
    const ApnpMatrix s = sweep_apnp(rg);
    ASSERT_EQ(describe_difference(naive_apnp(rg), s), "") << write_graph(g);
    ASSERT_EQ(compare_weights(s, testing::edge_state_apnp(g)), "");
    ASSERT_EQ(check_walks(s, g), "");
  }
}

TEST(Oracles, NaiveVisitsInCodeOrderOncePerPair) {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::random_graph(rng, 12, true, 0.4);
    const RankedGraph rg = rank_weights(g);
    NaiveStats st;
    const ApnpMatrix r = naive_apnp(rg, &st, true);
    EXPECT_TRUE(std::is_sorted(st.visit_codes.begin(), st.visit_codes.end()));
    EXPECT_EQ(st.visits, r.entries());
  }
}

TEST(Oracles, UndirectedBasicMatchesBruteForce) {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + static_cast<int>(rng.below(20)), false, trial % 3 * 0.3);
    const ApnpMatrix r = undirected_basic(g);
    ASSERT_EQ(compare_weights(r, testing::edge_state_apnp(g)), "") << write_graph(g);
    ASSERT_EQ(check_walks(r, g), "");
  }
}

TEST(Oracles, ClassSweepMatchesEdgeStateSearch) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_tied_graph(rng, 1 + static_cast<int>(rng.below(10)), trial % 2 == 0, 0.4, 2);
    const ApnpMatrix truth = testing::edge_state_apnp(g);
    const ApnpMatrix r = class_sweep_apnp(g);
    ASSERT_EQ(compare_weights(r, truth), "") << write_graph(g);
    ASSERT_EQ(check_last_edges(r, g, truth), "");
  }
}

}  // namespace
}  // namespace apnp
