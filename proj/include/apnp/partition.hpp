/*
  Recursive edge division by weight-code prefix, and vertex balancing.

  Starting from the whole edge set, each node [x] classifies its input edges
  E'[x] by degrees measured inside E'[x]:
    low       source outdegree <= cap                       -> L[x]
    high-low  source outdegree > cap, target indegree <= cap -> Gamma[x]
    high-high both above cap                                 -> H[x]
  H[x] is split by the next code bit into H'[x][0] and H'[x][1], which become
  the inputs of the two children. Every edge therefore ends up in exactly one
  L or Gamma set.

  balance() splits each vertex of an edge set into segments of at most `cap`
  edges, ordered by code, so the code ranges of one vertex's segments are
  disjoint and ascending.
*/
#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "apnp/graph.hpp"

namespace apnp {

// ceil(n^(1 - t)), at least 1.
int degree_cap(int n, double t);

struct PartitionNode {
  BitString prefix;
  CodeRange range;
  // Edge codes, ascending.
  std::vector<Code> low;
  std::vector<Code> high_low;
  std::array<std::vector<Code>, 2> high;  // H'[x][0], H'[x][1]
  std::array<int, 2> child{-1, -1};
  int parent = -1;
};

enum class EdgeRole : std::uint8_t { Low, HighLow };

class PartitionTree {
 public:
  PartitionTree() = default;

  static PartitionTree divide(const RankedGraph& rg, int cap);

  [[nodiscard]] int cap() const noexcept { return cap_; }
  [[nodiscard]] int bits() const noexcept { return bits_; }
  [[nodiscard]] std::span<const PartitionNode> nodes() const noexcept { return nodes_; }
  [[nodiscard]] const PartitionNode& node(int idx) const { return nodes_.at(static_cast<std::size_t>(idx)); }
  // Index of the node with this prefix, or -1.
  [[nodiscard]] int find(const BitString& prefix) const;
  // The node holding code c in its L or Gamma set, and which of the two.
  [[nodiscard]] int home_of(Code c) const { return home_[c]; }
  [[nodiscard]] EdgeRole role_of(Code c) const { return role_[c]; }

  // One line per node: `prefix |L| |Gamma| |H0| |H1|`, root prefix printed as "-".
  [[nodiscard]] std::string dump() const;

 private:
  int cap_ = 1;
  int bits_ = 1;
  std::vector<PartitionNode> nodes_;
  std::vector<int> home_;
  std::vector<EdgeRole> role_;
};

PartitionTree divide_edges(const RankedGraph& rg, double t);

enum class Side : std::uint8_t { In, Out };

struct Segment {
  VertexId vertex = 0;
  Code lo = 0;  // L(v'_r)
  Code hi = 0;  // R(v'_r)
  std::uint32_t begin = 0;  // into BalancedSide::edges
  std::uint32_t end = 0;
};

class BalancedSide {
 public:
  [[nodiscard]] Side side() const noexcept { return side_; }
  [[nodiscard]] int cap() const noexcept { return cap_; }
  // Vertices with at least one incident edge on this side, ascending.
  [[nodiscard]] std::span<const VertexId> vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::span<const Segment> segments() const noexcept { return segments_; }
  // Segment indices [first, last) of the vertex at position `vi` in vertices().
  [[nodiscard]] std::pair<std::uint32_t, std::uint32_t> segment_range(std::size_t vi) const {
    return {offsets_[vi], offsets_[vi + 1]};
  }
  // Position of v in vertices(), or -1.
  [[nodiscard]] int vertex_index(VertexId v) const;
  [[nodiscard]] std::span<const Code> edges(const Segment& s) const {
    return std::span<const Code>(edges_).subspan(s.begin, s.end - s.begin);
  }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }

  friend BalancedSide balance(const RankedGraph& rg, std::span<const Code> edges, Side side, int cap);

 private:
  Side side_ = Side::In;
  int cap_ = 1;
  std::vector<VertexId> vertices_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Segment> segments_;
  std::vector<Code> edges_;
};

// Groups edges by target (In) or source (Out), sorts each group by code and
// cuts it into runs of `cap`; only the last run of a vertex may be shorter.
BalancedSide balance(const RankedGraph& rg, std::span<const Code> edges, Side side, int cap);

}  // namespace apnp
