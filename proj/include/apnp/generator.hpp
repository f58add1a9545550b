// Seeded random graphs for tests, verification and benchmarks.
#pragma once

#include <cstdint>
#include <string_view>

#include "apnp/graph.hpp"
#include "apnp/rng.hpp"

namespace apnp {

enum class WeightMode { Distinct, Ties };

struct GenSpec {
  int n = 0;
  std::size_t m = 0;
  bool directed = true;
  // Allow repeated vertex pairs.
  bool multi = false;
  WeightMode mode = WeightMode::Distinct;
  // Number of distinct weight values in Ties mode; requires 1 <= classes <= m.
  std::size_t classes = 1;
  std::uint64_t seed = 1;
};

// Pairs a simple graph can hold: n(n-1), halved when undirected.
std::size_t max_edges(int n, bool directed);

// Distinct mode draws a random permutation of 1..m as weights; Ties mode
// uses exactly `classes` values 1..classes. Throws std::invalid_argument when
// m cannot be realized.
Graph generate(const GenSpec& spec);

// Same, drawing from an existing stream.
Graph generate(const GenSpec& spec, Rng& rng);

// Edge count for a density in [0, 1] of max_edges, at least n - 1 when possible.
std::size_t edges_for_density(int n, bool directed, double density);

}  // namespace apnp
