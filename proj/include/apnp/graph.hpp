/*
  Graph data model for all-pairs non-decreasing paths.

  A Graph is a list of weighted edges over vertices 0..n-1. Edge ids are the
  dense ordinals 0..m-1 in insertion (file) order. A RankedGraph replaces the
  weights by their ranks ("codes"), which requires all weights to be distinct;
  graphs with ties go through the tie reduction first.
*/
#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace apnp {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;
using Code = std::uint32_t;

inline constexpr Code kNoCode = std::numeric_limits<Code>::max();

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  Weight weight = 0;
  EdgeId id = 0;
};

class Graph {
 public:
  Graph() = default;
  Graph(int n, bool directed, bool multi = false);

  // Appends an edge and returns its id. Rejects out-of-range endpoints and
  // self-loops. Parallel edges are only checked by parse_graph.
  EdgeId add_edge(VertexId src, VertexId dst, Weight weight);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t m() const noexcept { return edges_.size(); }
  [[nodiscard]] bool directed() const noexcept { return directed_; }
  [[nodiscard]] bool multi() const noexcept { return multi_; }
  void set_multi(bool multi) noexcept { multi_ = multi; }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }
  [[nodiscard]] const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }

  [[nodiscard]] bool has_distinct_weights() const;
  // True if two edges join the same (ordered, or unordered when undirected) pair.
  [[nodiscard]] bool has_parallel_edges() const;

  friend bool operator==(const Graph&, const Graph&);

 private:
  int n_ = 0;
  bool directed_ = true;
  bool multi_ = false;
  std::vector<Edge> edges_;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.src == b.src && a.dst == b.dst && a.weight == b.weight && a.id == b.id;
}

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ParseOptions {
  // Reject inputs where two edges share a weight.
  bool require_distinct = false;
};

// Header `n m directed|undirected [multi]`, then m lines `src dst weight`.
Graph parse_graph(std::string_view text, const ParseOptions& options = {});

// Canonical graph file text; parse_graph(write_graph(g)) == g.
std::string write_graph(const Graph& g);

// Weight codes. code(e) is the rank of w(e) among all weights, so codes form
// the bijection E -> {0..m-1} and preserve weight order.
class RankedGraph {
 public:
  RankedGraph() = default;

  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] int n() const noexcept { return graph_.n(); }
  [[nodiscard]] std::size_t m() const noexcept { return graph_.m(); }
  // Bit length b = max(1, ceil(log2 m)).
  [[nodiscard]] int bits() const noexcept { return bits_; }
  [[nodiscard]] Code code(EdgeId e) const { return code_of_edge_[static_cast<std::size_t>(e)]; }
  [[nodiscard]] EdgeId edge_id(Code c) const { return edge_of_code_[c]; }
  [[nodiscard]] const Edge& edge_at(Code c) const { return graph_.edge(edge_of_code_[c]); }
  [[nodiscard]] Weight weight_of(Code c) const { return edge_at(c).weight; }

  friend RankedGraph rank_weights(Graph g);

 private:
  Graph graph_;
  int bits_ = 1;
  std::vector<Code> code_of_edge_;
  std::vector<EdgeId> edge_of_code_;
};

// Throws std::invalid_argument on duplicate weights.
RankedGraph rank_weights(Graph g);

int code_bits(std::size_t m);

// Bit string of length <= 63, first bit most significant. Ordered
// lexicographically, so a proper prefix sorts before its extensions.
class BitString {
 public:
  BitString() = default;

  static BitString from_code(Code code, int width);
  static BitString parse(std::string_view bits);

  [[nodiscard]] int size() const noexcept { return len_; }
  [[nodiscard]] bool empty() const noexcept { return len_ == 0; }
  [[nodiscard]] std::uint64_t value() const noexcept { return bits_; }
  [[nodiscard]] bool bit(int i) const;
  [[nodiscard]] BitString prefix(int len) const;
  [[nodiscard]] BitString append(bool bit) const;
  [[nodiscard]] BitString concat(const BitString& tail) const;
  [[nodiscard]] bool has_prefix(const BitString& p) const;
  [[nodiscard]] std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

 private:
  std::uint64_t bits_ = 0;
  int len_ = 0;
};

BitString lcp(const BitString& a, const BitString& b);

struct CodeRange {
  Code lo = 0;
  Code hi = 0;
  [[nodiscard]] bool contains(Code c) const noexcept { return lo <= c && c <= hi; }
  friend bool operator==(const CodeRange&, const CodeRange&) = default;
};

// Smallest and largest b-bit codes carrying the prefix.
CodeRange code_interval(const BitString& prefix, int bits);

}  // namespace apnp
