#include "apnp/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace apnp {

BucketQueue::BucketQueue(std::size_t num_items, std::size_t num_buckets)
    : head_(num_buckets, kNone), next_(num_items, kNone), prev_(num_items, kNone), where_(num_items, kNone) {}

void BucketQueue::unlink(std::uint32_t item) {
  const auto b = where_[item];
  if (prev_[item] != kNone) {
    next_[prev_[item]] = next_[item];
  } else {
    head_[b] = next_[item];
  }
  if (next_[item] != kNone) prev_[next_[item]] = prev_[item];
  next_[item] = prev_[item] = kNone;
  where_[item] = kNone;
  --size_;
}

void BucketQueue::push(std::uint32_t item, std::uint32_t bucket) {
  if (bucket < floor_) throw std::logic_error("bucket queue: push below the drained region");
  if (where_[item] == bucket) return;
  if (where_[item] != kNone) unlink(item);
  next_[item] = head_[bucket];
  prev_[item] = kNone;
  if (head_[bucket] != kNone) prev_[head_[bucket]] = item;
  head_[bucket] = item;
  where_[item] = bucket;
  ++size_;
}

void BucketQueue::take(std::uint32_t bucket, std::vector<std::uint32_t>& out) {
  out.clear();
  for (auto it = head_[bucket]; it != kNone;) {
    const auto nx = next_[it];
    out.push_back(it);
    next_[it] = prev_[it] = kNone;
    where_[it] = kNone;
    --size_;
    it = nx;
  }
  head_[bucket] = kNone;
  floor_ = bucket + 1;
}

ApnpMatrix naive_apnp(const RankedGraph& rg, NaiveStats* stats, bool log_visits) {
  const int n = rg.n();
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  const std::size_t m = rg.m();
  ApnpMatrix out(n);
  if (m == 0) return out;

  // Out-edges per vertex, ascending code.
  std::vector<std::vector<Code>> adj(static_cast<std::size_t>(n));
  for (Code c = 0; c < m; ++c) adj[static_cast<std::size_t>(rg.edge_at(c).src)].push_back(c);

  std::vector<Code> d(nn, kNoCode);
  std::vector<std::uint8_t> visited(nn, 0);
  BucketQueue queue(nn, m);
  auto relax = [&](std::size_t pair, Code c) {
    if (c < d[pair]) {
      d[pair] = c;
      queue.push(static_cast<std::uint32_t>(pair), c);
    }
  };
  for (Code c = 0; c < m; ++c) {
    const Edge& e = rg.edge_at(c);
    relax(static_cast<std::size_t>(e.src) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.dst), c);
  }

  std::vector<std::uint32_t> bucket;
  for (Code x = 0; x < m; ++x) {
    queue.take(x, bucket);
    for (auto pair : bucket) {
      visited[pair] = 1;
      const auto i = pair / static_cast<std::uint32_t>(n);
      const auto j = pair % static_cast<std::uint32_t>(n);
      if (stats) {
        ++stats->visits;
        if (log_visits) stats->visit_codes.push_back(x);
      }
      const auto& out_edges = adj[j];
      for (auto it = std::upper_bound(out_edges.begin(), out_edges.end(), x); it != out_edges.end(); ++it) {
        if (stats) ++stats->relaxations;
        const auto k = static_cast<std::size_t>(rg.edge_at(*it).dst);
        const std::size_t target = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + k;
        if (visited[target]) continue;
        relax(target, *it);
      }
    }
  }

  for (std::size_t p = 0; p < nn; ++p) {
    if (d[p] == kNoCode) continue;
    const Edge& e = rg.edge_at(d[p]);
    out.set(static_cast<int>(p / static_cast<std::size_t>(n)), static_cast<int>(p % static_cast<std::size_t>(n)),
            e.weight, e.id);
  }
  return out;
}

ApnpMatrix sweep_apnp(const RankedGraph& rg) {
  const int n = rg.n();
  const auto nu = static_cast<std::size_t>(n);
  const std::size_t words = (nu + 63) / 64;
  ApnpMatrix out(n);
  // reached[v] is the set of sources s with a non-decreasing walk s -> v.
  std::vector<std::uint64_t> reached(nu * words, 0);
  std::vector<std::uint64_t> fresh(words);
  for (Code c = 0; c < rg.m(); ++c) {
    const Edge& e = rg.edge_at(c);
    const auto u = static_cast<std::size_t>(e.src);
    const auto v = static_cast<std::size_t>(e.dst);
    for (std::size_t w = 0; w < words; ++w) fresh[w] = reached[u * words + w];
    fresh[u / 64] |= std::uint64_t{1} << (u % 64);
    for (std::size_t w = 0; w < words; ++w) {
      fresh[w] &= ~reached[v * words + w];
      reached[v * words + w] |= fresh[w];
      auto bits = fresh[w];
      while (bits != 0) {
        const auto s = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        out.set(static_cast<int>(s), e.dst, e.weight, e.id);
        bits &= bits - 1;
      }
    }
  }
  return out;
}

BasicUndirected::BasicUndirected(int n) : n_(n), reach_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  for (int i = 0; i < n; ++i) reach_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;
}

void BasicUndirected::insert(const Edge& e, ApnpMatrix& out) {
  const auto nu = static_cast<std::size_t>(n_);
  const auto i = static_cast<std::size_t>(e.src);
  const auto j = static_cast<std::size_t>(e.dst);
  for (std::size_t s = 0; s < nu; ++s) {
    auto& si = reach_[s * nu + i];
    auto& sj = reach_[s * nu + j];
    if (si == 1 && sj == 0) {
      sj = 1;
      out.set(static_cast<int>(s), e.dst, e.weight, e.id);
    }
    if (sj == 1 && si == 0) {
      si = 1;
      out.set(static_cast<int>(s), e.src, e.weight, e.id);
    }
  }
}

ApnpMatrix undirected_basic(const Graph& g) {
  if (g.directed()) throw std::invalid_argument("undirected_basic: graph is directed");
  if (!g.has_distinct_weights()) throw std::invalid_argument("undirected_basic: weights must be distinct");
  std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) { return a.weight < b.weight; });
  ApnpMatrix out(g.n());
  BasicUndirected state(g.n());
  for (const auto& e : sorted) state.insert(e, out);
  // Closed walks: out along the lightest incident edge and straight back.
  for (const auto& e : sorted) {
    if (!out.present(e.src, e.src)) out.set(e.src, e.src, e.weight, e.id);
    if (!out.present(e.dst, e.dst)) out.set(e.dst, e.dst, e.weight, e.id);
  }
  return out;
}

ApnpMatrix class_sweep_apnp(const Graph& g) {
  const int n = g.n();
  const auto nu = static_cast<std::size_t>(n);
  ApnpMatrix out(n);
  std::map<Weight, std::vector<EdgeId>> classes;
  for (const auto& e : g.edges()) classes[e.weight].push_back(e.id);

  std::vector<std::uint8_t> reached(nu * nu, 0);
  std::vector<int> local(nu, -1);
  std::vector<int> stamp(nu, -1);
  std::vector<VertexId> queue;
  int stamp_id = 0;

  for (const auto& [w, ids] : classes) {
    // Arc list for the class; undirected edges contribute both directions.
    std::vector<VertexId> touched;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj;
    auto slot = [&](VertexId v) {
      auto& l = local[static_cast<std::size_t>(v)];
      if (l < 0) {
        l = static_cast<int>(touched.size());
        touched.push_back(v);
        adj.emplace_back();
      }
      return static_cast<std::size_t>(l);
    };
    for (auto id : ids) {
      const Edge& e = g.edge(id);
      adj[slot(e.src)].emplace_back(e.dst, id);
      slot(e.dst);
      if (!g.directed()) adj[slot(e.dst)].emplace_back(e.src, id);
    }

    std::vector<std::pair<VertexId, EdgeId>> newly;
    for (std::size_t s = 0; s < nu; ++s) {
      ++stamp_id;
      queue.clear();
      // Seeds: the source itself and everything it already reaches through
      // lighter classes. Neither counts as reached until a class arc lands on it.
      for (auto v : touched) {
        if (static_cast<std::size_t>(v) == s || reached[s * nu + static_cast<std::size_t>(v)]) queue.push_back(v);
      }
      newly.clear();
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const VertexId u = queue[qi];
        for (const auto& [v, id] : adj[static_cast<std::size_t>(local[static_cast<std::size_t>(u)])]) {
          if (stamp[static_cast<std::size_t>(v)] == stamp_id) continue;
          stamp[static_cast<std::size_t>(v)] = stamp_id;
          newly.emplace_back(v, id);
          queue.push_back(v);
        }
      }
      for (const auto& [v, id] : newly) {
        auto& r = reached[s * nu + static_cast<std::size_t>(v)];
        if (!r) {
          r = 1;
          out.set(static_cast<int>(s), v, w, id);
        }
      }
    }
    for (auto v : touched) local[static_cast<std::size_t>(v)] = -1;
  }
  return out;
}

}  // namespace apnp
