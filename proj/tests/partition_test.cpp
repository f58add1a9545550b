#include <gtest/gtest.h>

#include <map>

#include "apnp/partition.hpp"
#include "support/brute.hpp"

namespace apnp {
namespace {

using testing::graph_from;

// Checks every tree invariant; returns the number of edges placed in L or Gamma.
void expect_tree_invariants(const RankedGraph& rg, const PartitionTree& tree) {
  std::vector<int> placed(rg.m(), 0);
  for (const auto& node : tree.nodes()) {
    std::vector<Code> input = node.low;
    input.insert(input.end(), node.high_low.begin(), node.high_low.end());
    input.insert(input.end(), node.high[0].begin(), node.high[0].end());
    input.insert(input.end(), node.high[1].begin(), node.high[1].end());
    std::map<VertexId, int> out;
    std::map<VertexId, int> in;
    for (Code c : input) {
      EXPECT_TRUE(BitString::from_code(c, rg.bits()).has_prefix(node.prefix));
      ++out[rg.edge_at(c).src];
      ++in[rg.edge_at(c).dst];
    }
    for (Code c : node.low) {
      EXPECT_LE(out[rg.edge_at(c).src], tree.cap());
      ++placed[c];
    }
    for (Code c : node.high_low) {
      EXPECT_GT(out[rg.edge_at(c).src], tree.cap());
      EXPECT_LE(in[rg.edge_at(c).dst], tree.cap());
      ++placed[c];
    }
    for (int b = 0; b < 2; ++b) {
      for (Code c : node.high[static_cast<std::size_t>(b)]) {
        EXPECT_GT(out[rg.edge_at(c).src], tree.cap());
        EXPECT_GT(in[rg.edge_at(c).dst], tree.cap());
        EXPECT_EQ(BitString::from_code(c, rg.bits()).bit(node.prefix.size()), b == 1);
      }
      const int child = node.child[static_cast<std::size_t>(b)];
      EXPECT_EQ(child >= 0, !node.high[static_cast<std::size_t>(b)].empty());
      if (child >= 0) EXPECT_EQ(tree.node(child).prefix, node.prefix.append(b == 1));
    }
  }
  for (Code c = 0; c < rg.m(); ++c) {
    EXPECT_EQ(placed[c], 1) << "code " << c;
    const auto& home = tree.node(tree.home_of(c));
    const auto& list = tree.role_of(c) == EdgeRole::Low ? home.low : home.high_low;
    EXPECT_NE(std::find(list.begin(), list.end(), c), list.end());
  }
}

TEST(DegreeCap, Values) {
  EXPECT_EQ(degree_cap(64, 0.5), 8);
  EXPECT_EQ(degree_cap(100, 0.0), 100);
  EXPECT_EQ(degree_cap(100, 1.0), 1);
  EXPECT_EQ(degree_cap(10, 0.5), 4);
  EXPECT_THROW(degree_cap(10, 1.5), std::invalid_argument);
}

TEST(DivideEdges, AllLowWhenDegreesAreSmall) {
  const RankedGraph rg = rank_weights(graph_from(4, true, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 4}}));
  const PartitionTree tree = PartitionTree::divide(rg, 1);
  ASSERT_EQ(tree.nodes().size(), 1U);
  EXPECT_EQ(tree.node(0).low.size(), 4U);
  EXPECT_TRUE(tree.node(0).high_low.empty());
}

TEST(DivideEdges, CompleteBipartiteGoesHighHigh) {
  // Sources 0,1 and sinks 2,3; codes 0..3.
  const RankedGraph rg = rank_weights(graph_from(4, true, {{0, 2, 1}, {0, 3, 2}, {1, 2, 3}, {1, 3, 4}}));
  const PartitionTree tree = PartitionTree::divide(rg, 1);
  const auto& root = tree.node(0);
  EXPECT_TRUE(root.low.empty());
  EXPECT_TRUE(root.high_low.empty());
  EXPECT_EQ(root.high[0].size(), 2U);
  EXPECT_EQ(root.high[1].size(), 2U);
  expect_tree_invariants(rg, tree);
  EXPECT_EQ(tree.dump().substr(0, 10), "- 0 0 2 2\n");
}

TEST(DivideEdges, StarIntoLowSinksIsHighLow) {
  const RankedGraph rg = rank_weights(graph_from(5, true, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {0, 4, 4}}));
  const PartitionTree tree = PartitionTree::divide(rg, 2);
  ASSERT_EQ(tree.nodes().size(), 1U);
  EXPECT_EQ(tree.node(0).high_low.size(), 4U);
}

TEST(DivideEdges, InvariantsOnRandomGraphs) {
  Rng rng(404);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(40));
    const RankedGraph rg = rank_weights(testing::random_graph(rng, n, true, rng.unit()));
    for (double t : {0.3, 0.6, 1.0}) expect_tree_invariants(rg, divide_edges(rg, t));
  }
}

TEST(DivideEdges, FindLocatesNodes) {
  const RankedGraph rg = rank_weights(graph_from(4, true, {{0, 2, 1}, {0, 3, 2}, {1, 2, 3}, {1, 3, 4}}));
  const PartitionTree tree = PartitionTree::divide(rg, 1);
  EXPECT_EQ(tree.find(BitString{}), 0);
  const int one = tree.find(BitString::parse("1"));
  ASSERT_GE(one, 0);
  EXPECT_EQ(tree.node(one).prefix.str(), "1");
}

void expect_balanced(const RankedGraph& rg, std::span<const Code> edges, const BalancedSide& side, int cap) {
  std::map<VertexId, int> degree;
  for (Code c : edges) ++degree[side.side() == Side::In ? rg.edge_at(c).dst : rg.edge_at(c).src];
  std::size_t covered = 0;
  std::size_t incomplete = 0;
  for (std::size_t vi = 0; vi < side.vertices().size(); ++vi) {
    const VertexId v = side.vertices()[vi];
    const auto [s0, s1] = side.segment_range(vi);
    for (auto r = s0; r < s1; ++r) {
      const Segment& seg = side.segments()[r];
      const auto es = side.edges(seg);
      EXPECT_EQ(seg.vertex, v);
      EXPECT_LE(es.size(), static_cast<std::size_t>(cap));
      if (r + 1 < s1) {
        EXPECT_EQ(es.size(), static_cast<std::size_t>(cap));
      } else if (es.size() < static_cast<std::size_t>(cap)) {
        ++incomplete;
      }
      EXPECT_TRUE(std::is_sorted(es.begin(), es.end()));
      EXPECT_EQ(seg.lo, es.front());
      EXPECT_EQ(seg.hi, es.back());
      if (r > s0) EXPECT_LT(side.segments()[r - 1].hi, seg.lo);
      for (Code c : es) EXPECT_EQ(side.side() == Side::In ? rg.edge_at(c).dst : rg.edge_at(c).src, v);
      covered += es.size();
    }
    EXPECT_EQ(static_cast<int>(side.edges(side.segments()[s1 - 1]).end() - side.edges(side.segments()[s0]).begin()),
              degree[v]);
  }
  EXPECT_EQ(covered, edges.size());
  EXPECT_EQ(side.vertices().size(), degree.size());
  EXPECT_LE(side.segments().size(), (edges.size() + static_cast<std::size_t>(cap) - 1) / static_cast<std::size_t>(cap) + incomplete);
}

TEST(Balance, FiveInEdgesCapTwo) {
  const RankedGraph rg = rank_weights(graph_from(6, true, {{0, 5, 10}, {1, 5, 3}, {2, 5, 7}, {3, 5, 1}, {4, 5, 5}}));
  const std::vector<Code> all{0, 1, 2, 3, 4};
  const BalancedSide side = balance(rg, all, Side::In, 2);
  ASSERT_EQ(side.segments().size(), 3U);
  EXPECT_EQ(side.edges(side.segments()[0]).size(), 2U);
  EXPECT_EQ(side.edges(side.segments()[1]).size(), 2U);
  EXPECT_EQ(side.edges(side.segments()[2]).size(), 1U);
  EXPECT_EQ(side.segments()[0].lo, 0U);
  EXPECT_EQ(side.segments()[0].hi, 1U);
  EXPECT_EQ(side.segments()[2].lo, 4U);
  expect_balanced(rg, all, side, 2);
}

TEST(Balance, SmallDegreesGiveOneSegmentEach) {
  const RankedGraph rg = rank_weights(graph_from(4, true, {{0, 1, 1}, {2, 3, 2}, {0, 3, 3}}));
  const std::vector<Code> all{0, 1, 2};
  const BalancedSide side = balance(rg, all, Side::Out, 4);
  EXPECT_EQ(side.segments().size(), side.vertices().size());
  EXPECT_EQ(side.vertex_index(1), -1);
  EXPECT_EQ(side.vertex_index(2), 1);
}

TEST(Balance, DegreesThreeAndFourCapTwo) {
  const RankedGraph rg =
      rank_weights(graph_from(9, true, {{2, 0, 1}, {3, 0, 2}, {4, 0, 3}, {5, 1, 4}, {6, 1, 5}, {7, 1, 6}, {8, 1, 7}}));
  const std::vector<Code> all{0, 1, 2, 3, 4, 5, 6};
  const BalancedSide side = balance(rg, all, Side::In, 2);
  EXPECT_EQ(side.segments().size(), 4U);
  EXPECT_LE(side.segments().size(), 4U + 2U);
  expect_balanced(rg, all, side, 2);
}

TEST(Balance, InvariantsOnRandomEdgeSets) {
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const RankedGraph rg = rank_weights(testing::random_graph(rng, 2 + static_cast<int>(rng.below(30)), true, rng.unit()));
    std::vector<Code> subset;
    for (Code c = 0; c < rg.m(); ++c) {
      if (rng.below(3) != 0) subset.push_back(c);
    }
    const int cap = 1 + static_cast<int>(rng.below(6));
    expect_balanced(rg, subset, balance(rg, subset, Side::In, cap), cap);
    expect_balanced(rg, subset, balance(rg, subset, Side::Out, cap), cap);
  }
}

}  // namespace
}  // namespace apnp
