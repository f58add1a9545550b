#include "support/brute.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace apnp::testing {

ApnpMatrix edge_state_apnp(const Graph& g) {
  const int n = g.n();
  // Oriented arcs: (tail, head, weight, edge id).
  struct Arc {
    VertexId tail;
    VertexId head;
    Weight w;
    EdgeId id;
  };
  std::vector<Arc> arcs;
  for (const auto& e : g.edges()) {
    arcs.push_back({e.src, e.dst, e.weight, e.id});
    if (!g.directed()) arcs.push_back({e.dst, e.src, e.weight, e.id});
  }
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < arcs.size(); ++a) out[static_cast<std::size_t>(arcs[a].tail)].push_back(a);

  ApnpMatrix r(n);
  for (int s = 0; s < n; ++s) {
    std::vector<char> seen(arcs.size(), 0);
    std::deque<std::size_t> queue;
    for (auto a : out[static_cast<std::size_t>(s)]) {
      seen[a] = 1;
      queue.push_back(a);
    }
    while (!queue.empty()) {
      const auto a = queue.front();
      queue.pop_front();
      const Arc& arc = arcs[a];
      const auto cur = r.opt(s, arc.head);
      if (!cur || arc.w < *cur || (arc.w == *cur && arc.id < *r.last_edge(s, arc.head))) {
        r.set(s, arc.head, arc.w, arc.id);
      }
      for (auto b : out[static_cast<std::size_t>(arc.head)]) {
        if (!seen[b] && arcs[b].w >= arc.w) {
          seen[b] = 1;
          queue.push_back(b);
        }
      }
    }
  }
  return r;
}

CountMatrix naive_product(const BitMatrix& a, const BitMatrix& b) {
  CountMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint32_t sum = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) sum += (a.get(i, k) && b.get(k, j)) ? 1 : 0;
      c.at(i, j) = sum;
    }
  }
  return c;
}

std::optional<std::size_t> linear_mismatch(const std::string& a, const std::string& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return i;
  }
  return std::nullopt;
}

Graph graph_from(int n, bool directed, const std::vector<std::tuple<int, int, Weight>>& edges, bool multi) {
  Graph g(n, directed, multi);
  for (const auto& [u, v, w] : edges) g.add_edge(u, v, w);
  return g;
}

namespace {

std::vector<std::pair<int, int>> random_pairs(Rng& rng, int n, bool directed, double density) {
  std::vector<std::pair<int, int>> pairs;
  if (n < 2) return pairs;
  if (density <= 0.0) {
    // Random spanning tree: each vertex attaches to an earlier one, then
    // labels are permuted and directions chosen at random.
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = v;
    rng.shuffle(label);
    for (int v = 1; v < n; ++v) {
      int a = label[static_cast<std::size_t>(v)];
      int b = label[rng.below(static_cast<std::uint64_t>(v))];
      if (directed && rng.below(2) == 0) std::swap(a, b);
      pairs.emplace_back(a, b);
    }
    return pairs;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = directed ? 0 : u + 1; v < n; ++v) {
      if (u != v && rng.unit() < density) pairs.emplace_back(u, v);
    }
  }
  rng.shuffle(pairs);
  return pairs;
}

}  // namespace

Graph random_graph(Rng& rng, int n, bool directed, double density) {
  auto pairs = random_pairs(rng, n, directed, density);
  std::vector<Weight> w(pairs.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<Weight>(i) * 7 - 100;
  rng.shuffle(w);
  Graph g(n, directed);
  for (std::size_t i = 0; i < pairs.size(); ++i) g.add_edge(pairs[i].first, pairs[i].second, w[i]);
  return g;
}

Graph random_tied_graph(Rng& rng, int n, bool directed, double density, int classes) {
  auto pairs = random_pairs(rng, n, directed, density);
  Graph g(n, directed);
  for (const auto& [u, v] : pairs) {
    g.add_edge(u, v, static_cast<Weight>(1 + rng.below(static_cast<std::uint64_t>(classes))));
  }
  return g;
}

BitMatrix random_bits(Rng& rng, std::size_t rows, std::size_t cols, double p) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (rng.unit() < p) m.set(r, c);
    }
  }
  return m;
}

}  // namespace apnp::testing
