/*
  Near-quadratic undirected APNP.

  Edges are inserted in ascending weight order. String B_v holds column v of
  the reachability matrix: bit s of B_v is set once s reaches v. Inserting
  {i, j} merges the columns of i and j: while they differ, the first
  mismatch s gains a walk to the endpoint it was missing, ending with this
  edge. Each bit flips at most once, so there are at most n^2 updates.
*/
#pragma once

#include <cstdint>

#include "apnp/dynstring.hpp"
#include "apnp/graph.hpp"
#include "apnp/result.hpp"

namespace apnp {

struct UndirectedOptions {
  std::uint64_t seed = 0x5eed;
  // Confirm every positive equality test by full comparison.
  bool verify_strings = false;
};

struct UndirectedStats {
  std::uint64_t edges = 0;
  std::uint64_t flips = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t equal_calls = 0;
  std::uint64_t mismatch_max_equals = 0;
};

class UndirectedFastSolver {
 public:
  UndirectedFastSolver(int n, const UndirectedOptions& options = {});

  // Edges must arrive in non-decreasing weight order.
  void insert(const Edge& e, ApnpMatrix& out);
  // Bit s of B_v: s has a non-decreasing walk to v (or s == v).
  [[nodiscard]] bool reaches(int s, int v) const;
  [[nodiscard]] UndirectedStats stats() const;

 private:
  int n_;
  StringFamily family_;
  std::vector<StringFamily::Handle> columns_;
  UndirectedStats stats_;
};

// Graphs with repeated weights go through the tie reduction and are lifted
// back. Throws std::invalid_argument on directed input.
ApnpMatrix solve_undirected(const Graph& g, const UndirectedOptions& options = {}, UndirectedStats* stats = nullptr);

}  // namespace apnp
