/*
  Reference solvers used as ground truth.

  naive_apnp     Dijkstra-type search over pairs with a bucket queue; every
                 visit relaxes all heavier out-edges of the pair's endpoint.
  sweep_apnp     Inserts edges in ascending code order and keeps per-target
                 reachability bitsets; the first edge that makes s reach v
                 fixes OPT(s, v).
  undirected_basic
                 The cubic undirected sweep with both-direction updates.
  class_sweep_apnp
                 Like sweep_apnp but one weight class at a time with a BFS
                 inside the class, so it is exact for ties and multi-edges
                 under non-decreasing (<=) semantics.
*/
#pragma once

#include <cstdint>
#include <vector>

#include "apnp/graph.hpp"
#include "apnp/result.hpp"

namespace apnp {

// Buckets indexed by code, each an intrusive doubly linked list of items.
// An item sits in at most one bucket; pushing it again moves it.
class BucketQueue {
 public:
  BucketQueue(std::size_t num_items, std::size_t num_buckets);

  // Insert `item` into `bucket`, or move it there. The bucket must not be
  // below the last drained bucket.
  void push(std::uint32_t item, std::uint32_t bucket);
  [[nodiscard]] bool queued(std::uint32_t item) const { return where_[item] != kNone; }
  // Detaches every item of `bucket` into `out` (cleared first).
  void take(std::uint32_t bucket, std::vector<std::uint32_t>& out);
  [[nodiscard]] std::size_t size() const noexcept { return size_; }

 private:
  static constexpr std::uint32_t kNone = 0xffffffffU;

  void unlink(std::uint32_t item);

  std::vector<std::uint32_t> head_;
  std::vector<std::uint32_t> next_;
  std::vector<std::uint32_t> prev_;
  std::vector<std::uint32_t> where_;
  std::uint32_t floor_ = 0;
  std::size_t size_ = 0;
};

struct NaiveStats {
  std::uint64_t visits = 0;
  std::uint64_t relaxations = 0;
  // Codes of visited pairs, in visit order (only filled when requested).
  std::vector<Code> visit_codes;
};

ApnpMatrix naive_apnp(const RankedGraph& rg, NaiveStats* stats = nullptr, bool log_visits = false);

ApnpMatrix sweep_apnp(const RankedGraph& rg);

// Algorithm state exposed for lock-step comparisons: reaches(s, v) is A[s][v].
class BasicUndirected {
 public:
  explicit BasicUndirected(int n);
  // Inserts the next heavier edge and records newly fixed optima.
  void insert(const Edge& e, ApnpMatrix& out);
  [[nodiscard]] bool reaches(int s, int v) const {
    return reach_[static_cast<std::size_t>(s) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] != 0;
  }

 private:
  int n_;
  std::vector<std::uint8_t> reach_;
};

// Requires an undirected graph with distinct weights. Diagonal entries are
// the lightest incident edge (walk out along it and back).
ApnpMatrix undirected_basic(const Graph& g);

// Exact for any graph, including ties and parallel edges. The last edge of an
// entry is the class edge along which the in-class search first reached it.
ApnpMatrix class_sweep_apnp(const Graph& g);

}  // namespace apnp
