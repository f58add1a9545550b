#include "apnp/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace apnp {

std::size_t max_edges(int n, bool directed) {
  if (n < 2) return 0;
  const auto nn = static_cast<std::size_t>(n);
  return directed ? nn * (nn - 1) : nn * (nn - 1) / 2;
}

std::size_t edges_for_density(int n, bool directed, double density) {
  const std::size_t top = max_edges(n, directed);
  const auto want = static_cast<std::size_t>(std::llround(density * static_cast<double>(top)));
  const std::size_t floor = n >= 2 ? std::min(top, static_cast<std::size_t>(n - 1)) : 0;
  return std::clamp(want, floor, top);
}

Graph generate(const GenSpec& spec) {
  Rng rng(spec.seed);
  return generate(spec, rng);
}

Graph generate(const GenSpec& spec, Rng& rng) {
  if (spec.n < 0) throw std::invalid_argument("gen: negative vertex count");
  const std::size_t top = max_edges(spec.n, spec.directed);
  if (spec.m > 0 && spec.n < 2) throw std::invalid_argument("gen: edges need at least two vertices");
  if (!spec.multi && spec.m > top) {
    throw std::invalid_argument("gen: " + std::to_string(spec.m) + " edges exceed the " + std::to_string(top) +
                                " a simple graph on " + std::to_string(spec.n) + " vertices can hold");
  }
  if (spec.mode == WeightMode::Ties && spec.m > 0 && (spec.classes < 1 || spec.classes > spec.m)) {
    throw std::invalid_argument("gen: ties mode needs 1 <= classes <= m");
  }

  const auto n = static_cast<std::uint64_t>(spec.n);
  auto random_pair = [&]() {
    const auto u = static_cast<VertexId>(rng.below(n));
    auto v = static_cast<VertexId>(rng.below(n - 1));
    if (v >= u) ++v;
    return std::make_pair(u, v);
  };

  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(spec.m);
  if (spec.multi) {
    for (std::size_t e = 0; e < spec.m; ++e) pairs.push_back(random_pair());
  } else if (spec.m * 2 > top) {
    // Dense: shuffle every admissible pair and keep a prefix.
    for (VertexId u = 0; u < spec.n; ++u) {
      for (VertexId v = spec.directed ? 0 : u + 1; v < spec.n; ++v) {
        if (u != v) pairs.emplace_back(u, v);
      }
    }
    rng.shuffle(pairs);
    pairs.resize(spec.m);
  } else {
    std::unordered_set<std::uint64_t> used;
    while (pairs.size() < spec.m) {
      auto [u, v] = random_pair();
      const auto a = static_cast<std::uint64_t>(spec.directed ? u : std::min(u, v));
      const auto b = static_cast<std::uint64_t>(spec.directed ? v : std::max(u, v));
      if (used.insert(a * n + b).second) pairs.emplace_back(u, v);
    }
  }

  std::vector<Weight> weights(spec.m);
  if (spec.mode == WeightMode::Distinct) {
    for (std::size_t e = 0; e < spec.m; ++e) weights[e] = static_cast<Weight>(e + 1);
  } else {
    for (std::size_t e = 0; e < spec.m; ++e) {
      weights[e] = static_cast<Weight>(e < spec.classes ? e + 1 : rng.below(spec.classes) + 1);
    }
  }
  rng.shuffle(weights);

  Graph g(spec.n, spec.directed, spec.multi);
  for (std::size_t e = 0; e < spec.m; ++e) g.add_edge(pairs[e].first, pairs[e].second, weights[e]);
  return g;
}

}  // namespace apnp
