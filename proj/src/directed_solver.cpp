#include "apnp/directed_solver.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "apnp/oracle.hpp"
#include "apnp/tie_reduction.hpp"

namespace apnp {

double SolverConfig::t() const {
  if (t_param) return *t_param;
  return std::clamp((3.0 - omega_eff) / 2.0, 0.0, 1.0);
}

std::string SolverStats::lines() const {
  std::ostringstream out;
  out << "n " << n << '\n'
      << "m " << m << '\n'
      << "bits " << bits << '\n'
      << "cap " << cap << '\n'
      << "t " << t << '\n'
      << "tree_nodes " << tree_nodes << '\n'
      << "visits " << visits << '\n'
      << "low_relax " << low_relax << '\n'
      << "low_relax_max_per_visit " << low_relax_max_per_visit << '\n'
      << "high_high_batches " << high_high_batches << '\n'
      << "high_high_relax " << high_high_relax << '\n'
      << "high_low_structs " << high_low_structs << '\n'
      << "high_low_relax " << high_low_relax << '\n'
      << "q_additions " << q_additions << '\n'
      << "waiting_insertions " << waiting_insertions << '\n'
      << "waiting_max_per_q " << waiting_max_per_q << '\n'
      << "matmul_calls " << matmul_calls << '\n'
      << "matmul_cell_ops " << matmul_cell_ops << '\n'
      << "max_live_structs " << max_live_structs << '\n'
      << "incremental_checks " << incremental_checks << '\n'
      << "bound_checks " << bound_checks << '\n';
  return out.str();
}

namespace {

struct HighLow {
  int node = -1;
  Code lo = 0;
  BalancedSide out;
  std::vector<VertexId> ks;
  std::vector<int> k_index;
  BitMatrix a;
  BitMatrix b;
  CountMatrix c;
  std::vector<std::uint8_t> q;  // n x |K|
  std::vector<std::vector<std::uint32_t>> k_segments;
  std::vector<std::vector<std::pair<VertexId, Code>>> k_in_edges;
  // W(i, j) keyed by i * n + j: (k index, edge code) to relax once d(i, j) is visited.
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint32_t, Code>>> waiting;
};

void fail(const std::string& what) { throw std::logic_error("directed solver: " + what); }

class Solver {
 public:
  Solver(const RankedGraph& rg, const SolverConfig& cfg) : rg_(rg), cfg_(cfg) {}

  DirectedResult run();

 private:
  [[nodiscard]] std::size_t pair(std::size_t i, std::size_t k) const { return i * nu_ + k; }
  bool relax(std::size_t i, std::size_t k, Code code, RelaxSite site);
  void visit(std::uint32_t p);
  std::uint64_t relax_low(int node, std::size_t i, VertexId j);
  void high_high(int node);
  void init_high_low(int node);
  void high_low_visit(HighLow& h, std::size_t i, VertexId j);
  void flip(HighLow& h, std::size_t i, std::size_t kk);
  void finish_high_low(int node);
  CountMatrix multiply(const BitMatrix& a, const BitMatrix& b);
  void check_bounds();
  void check_sites();

  const RankedGraph& rg_;
  const SolverConfig& cfg_;
  std::size_t nu_ = 0;
  std::size_t m_ = 0;
  int cap_ = 1;
  PartitionTree tree_;
  std::vector<Code> d_;
  std::vector<std::uint8_t> visited_;
  std::vector<RelaxSite> site_;
  std::unique_ptr<BucketQueue> queue_;
  std::vector<Code> visit_codes_;
  std::vector<std::uint32_t> visit_pairs_;
  // Per node, its L edges as (source, code) sorted lexicographically.
  std::vector<std::vector<std::pair<VertexId, Code>>> low_adj_;
  std::vector<std::uint8_t> in_high1_;
  std::vector<std::unique_ptr<HighLow>> live_;
  std::uint64_t live_count_ = 0;
  std::vector<std::vector<int>> init_at_;
  std::vector<std::vector<int>> hh_at_;
  std::vector<std::vector<int>> drop_at_;
  Code x_ = 0;
  bool in_visit_ = false;
  SolverStats stats_;
};

bool Solver::relax(std::size_t i, std::size_t k, Code code, RelaxSite site) {
  const std::size_t p = pair(i, k);
  if (visited_[p]) return false;
  if (in_visit_ ? code <= x_ : code < x_) fail("relaxation below the loop value");
  if (code >= d_[p]) return false;
  d_[p] = code;
  site_[p] = site;
  queue_->push(static_cast<std::uint32_t>(p), code);
  return true;
}

CountMatrix Solver::multiply(const BitMatrix& a, const BitMatrix& b) {
  ++stats_.matmul_calls;
  stats_.matmul_cell_ops += static_cast<std::uint64_t>(a.rows()) * a.cols() * b.cols();
  return mul_count(a, b, MatmulOptions{cfg_.kernel, 0});
}

std::uint64_t Solver::relax_low(int node, std::size_t i, VertexId j) {
  const auto& adj = low_adj_[static_cast<std::size_t>(node)];
  auto it = std::upper_bound(adj.begin(), adj.end(), std::make_pair(j, x_));
  std::uint64_t scanned = 0;
  for (; it != adj.end() && it->first == j; ++it) {
    ++scanned;
    if (cfg_.inject_fault && (it + 1 == adj.end() || (it + 1)->first != j)) break;
    relax(i, static_cast<std::size_t>(rg_.edge_at(it->second).dst), it->second, RelaxSite::Low);
  }
  return scanned;
}

void Solver::visit(std::uint32_t p) {
  visited_[p] = 1;
  visit_codes_.push_back(x_);
  visit_pairs_.push_back(p);
  ++stats_.visits;
  const std::size_t i = p / nu_;
  const auto j = static_cast<VertexId>(p % nu_);

  std::uint64_t low = 0;
  int node = 0;
  for (int depth = 0; node >= 0; ++depth) {
    low += relax_low(node, i, j);
    if (auto& h = live_[static_cast<std::size_t>(node)]) high_low_visit(*h, i, j);
    if (depth >= rg_.bits()) break;
    const bool bit = ((x_ >> (rg_.bits() - 1 - depth)) & 1U) != 0;
    node = tree_.node(node).child[bit ? 1 : 0];
  }
  stats_.low_relax += low;
  stats_.low_relax_max_per_visit = std::max(stats_.low_relax_max_per_visit, low);
  if (cfg_.check_bounds) {
    ++stats_.bound_checks;
    if (low > static_cast<std::uint64_t>(rg_.bits() + 1) * static_cast<std::uint64_t>(cap_)) {
      fail("low relaxations per visit exceed (b+1)*cap");
    }
  }
}

void Solver::high_high(int idx) {
  const PartitionNode& node = tree_.node(idx);
  ++stats_.high_high_batches;
  const std::vector<Code> edges = dedupe_parallel_min(rg_, node.high[1]);
  const BalancedSide in = balance(rg_, edges, Side::In, cap_);

  std::vector<VertexId> sources;
  for (Code c : edges) sources.push_back(rg_.edge_at(c).src);
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  std::vector<int> j_index(nu_, -1);
  for (std::size_t s = 0; s < sources.size(); ++s) j_index[static_cast<std::size_t>(sources[s])] = static_cast<int>(s);

  // A: visited pairs (i, j) whose code has prefix [y][0]. They are exactly the
  // visits logged since the first code of [y][0], as x is the first code of [y][1].
  const CodeRange zero = code_interval(node.prefix.append(false), rg_.bits());
  BitMatrix a(nu_, sources.size());
  auto first = std::lower_bound(visit_codes_.begin(), visit_codes_.end(), zero.lo);
  for (auto pos = static_cast<std::size_t>(first - visit_codes_.begin()); pos < visit_pairs_.size(); ++pos) {
    const std::size_t p = visit_pairs_[pos];
    const int jj = j_index[p % nu_];
    if (jj >= 0) a.set(p / nu_, static_cast<std::size_t>(jj));
  }

  const auto segments = in.segments();
  BitMatrix b(sources.size(), segments.size());
  for (std::size_t r = 0; r < segments.size(); ++r) {
    for (Code c : in.edges(segments[r])) b.set(static_cast<std::size_t>(j_index[static_cast<std::size_t>(rg_.edge_at(c).src)]), r);
  }
  const CountMatrix c = multiply(a, b);

  auto& counter = stats_.per_prefix[static_cast<std::size_t>(idx)].high_high_relax;
  const auto vertices = in.vertices();
  for (std::size_t vi = 0; vi < vertices.size(); ++vi) {
    const auto k = static_cast<std::size_t>(vertices[vi]);
    const auto [s0, s1] = in.segment_range(vi);
    for (std::size_t i = 0; i < nu_; ++i) {
      if (visited_[pair(i, k)]) continue;
      for (auto r = s0; r < s1; ++r) {
        if (c.at(i, r) == 0) continue;
        // The segment's edges are in code order, so the first one with a
        // predecessor in A is the lightest valid last edge for (i, k).
        for (Code code : in.edges(segments[r])) {
          ++counter;
          ++stats_.high_high_relax;
          const auto jj = static_cast<std::size_t>(j_index[static_cast<std::size_t>(rg_.edge_at(code).src)]);
          if (a.get(i, jj)) {
            relax(i, k, code, RelaxSite::HighHigh);
            break;
          }
        }
        break;
      }
    }
  }
}

void Solver::init_high_low(int idx) {
  const PartitionNode& node = tree_.node(idx);
  auto h = std::make_unique<HighLow>();
  h->node = idx;
  h->lo = node.range.lo;
  h->out = balance(rg_, node.high_low, Side::Out, cap_);

  for (Code c : node.high_low) h->ks.push_back(rg_.edge_at(c).dst);
  std::sort(h->ks.begin(), h->ks.end());
  h->ks.erase(std::unique(h->ks.begin(), h->ks.end()), h->ks.end());
  h->k_index.assign(nu_, -1);
  for (std::size_t kk = 0; kk < h->ks.size(); ++kk) h->k_index[static_cast<std::size_t>(h->ks[kk])] = static_cast<int>(kk);
  const std::size_t kn = h->ks.size();

  h->k_in_edges.resize(kn);
  for (Code c : node.high_low) {
    const Edge& e = rg_.edge_at(c);
    h->k_in_edges[static_cast<std::size_t>(h->k_index[static_cast<std::size_t>(e.dst)])].emplace_back(e.src, c);
  }

  const auto segments = h->out.segments();
  h->b = BitMatrix(kn, segments.size());
  h->k_segments.resize(kn);
  for (std::size_t r = 0; r < segments.size(); ++r) {
    for (Code c : h->out.edges(segments[r])) {
      const auto kk = static_cast<std::size_t>(h->k_index[static_cast<std::size_t>(rg_.edge_at(c).dst)]);
      if (!h->b.get(kk, r)) {
        h->b.set(kk, r);
        h->k_segments[kk].push_back(static_cast<std::uint32_t>(r));
      }
    }
  }

  h->a = BitMatrix(nu_, kn);
  for (std::size_t i = 0; i < nu_; ++i) {
    for (std::size_t kk = 0; kk < kn; ++kk) {
      if (!visited_[pair(i, static_cast<std::size_t>(h->ks[kk]))]) h->a.set(i, kk);
    }
  }
  h->c = multiply(h->a, h->b);
  h->q.assign(nu_ * kn, 0);

  ++stats_.high_low_structs;
  ++live_count_;
  stats_.max_live_structs = std::max(stats_.max_live_structs, live_count_);
  live_[static_cast<std::size_t>(idx)] = std::move(h);
}

void Solver::flip(HighLow& h, std::size_t i, std::size_t kk) {
  if (!h.a.get(i, kk)) fail("A entry cleared twice");
  h.a.reset(i, kk);
  for (auto r : h.k_segments[kk]) {
    auto& cell = h.c.at(i, r);
    if (cell == 0) fail("C entry would go negative");
    --cell;
  }
}

void Solver::high_low_visit(HighLow& h, std::size_t i, VertexId j) {
  auto& pc = stats_.per_prefix[static_cast<std::size_t>(h.node)];
  const std::size_t kn = h.ks.size();

  // (1) d(i, j) joins P.
  const int jk = h.k_index[static_cast<std::size_t>(j)];
  if (jk >= 0 && h.a.get(i, static_cast<std::size_t>(jk))) flip(h, i, static_cast<std::size_t>(jk));

  // (2) Replay the edges that were waiting for d(i, j).
  if (auto it = h.waiting.find(pair(i, static_cast<std::size_t>(j))); it != h.waiting.end()) {
    for (const auto& [kk, code] : it->second) {
      ++pc.high_low_relax;
      ++stats_.high_low_relax;
      if (code > x_) relax(i, static_cast<std::size_t>(h.ks[kk]), code, RelaxSite::HighLowWait);
    }
    h.waiting.erase(it);
  }

  // (3) Scan the segments of j that can still contribute.
  const int vi = h.out.vertex_index(j);
  if (vi < 0) return;
  const auto segments = h.out.segments();
  const auto [s0, s1] = h.out.segment_range(static_cast<std::size_t>(vi));
  for (auto r = s0; r < s1; ++r) {
    const Segment& seg = segments[r];
    if (x_ > seg.hi) continue;
    if (x_ < seg.lo && h.c.at(i, r) == 0) continue;
    for (Code code : h.out.edges(seg)) {
      if (code <= x_) continue;
      ++pc.high_low_relax;
      ++stats_.high_low_relax;
      const auto k = static_cast<std::size_t>(rg_.edge_at(code).dst);
      const auto kk = static_cast<std::size_t>(h.k_index[k]);
      if (visited_[pair(i, k)] || h.q[i * kn + kk]) continue;
      relax(i, k, code, RelaxSite::HighLowScan);
      if (code < h.lo) fail("Q entry below the prefix range");
      h.q[i * kn + kk] = 1;
      ++pc.q_additions;
      ++stats_.q_additions;
      flip(h, i, kk);
      std::uint64_t inserted = 0;
      for (const auto& [src, in_code] : h.k_in_edges[kk]) {
        if (visited_[pair(i, static_cast<std::size_t>(src))]) continue;
        h.waiting[pair(i, static_cast<std::size_t>(src))].emplace_back(static_cast<std::uint32_t>(kk), in_code);
        ++inserted;
      }
      pc.waiting_insertions += inserted;
      stats_.waiting_insertions += inserted;
      stats_.waiting_max_per_q = std::max(stats_.waiting_max_per_q, inserted);
      if (cfg_.check_bounds) {
        ++stats_.bound_checks;
        if (inserted > static_cast<std::uint64_t>(cap_)) fail("waiting-list insertions per Q addition exceed cap");
      }
    }
  }
}

void Solver::finish_high_low(int idx) {
  auto& h = live_[static_cast<std::size_t>(idx)];
  if (cfg_.verify_incremental) {
    const std::size_t kn = h->ks.size();
    BitMatrix expect(nu_, kn);
    for (std::size_t i = 0; i < nu_; ++i) {
      for (std::size_t kk = 0; kk < kn; ++kk) {
        if (!visited_[pair(i, static_cast<std::size_t>(h->ks[kk]))] && !h->q[i * kn + kk]) expect.set(i, kk);
      }
    }
    if (!(expect == h->a)) fail("maintained A differs from the visited/Q state");
    if (!(mul_count(h->a, h->b, MatmulOptions{cfg_.kernel, 0}) == h->c)) fail("maintained C differs from A.B");
    ++stats_.incremental_checks;
  }
  h.reset();
  --live_count_;
}

void Solver::check_bounds() {
  auto count_in = [&](CodeRange r) {
    const auto lo = std::lower_bound(visit_codes_.begin(), visit_codes_.end(), r.lo);
    const auto hi = std::upper_bound(visit_codes_.begin(), visit_codes_.end(), r.hi);
    return static_cast<std::uint64_t>(hi - lo);
  };
  const auto cap = static_cast<std::uint64_t>(cap_);
  const auto nodes = tree_.nodes();
  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    auto& pc = stats_.per_prefix[idx];
    pc.optimal = count_in(nodes[idx].range);
    if (!cfg_.check_bounds) continue;
    if (nodes[idx].child[1] >= 0) {
      ++stats_.bound_checks;
      const auto n1 = count_in(code_interval(nodes[idx].prefix.append(true), rg_.bits()));
      if (pc.high_high_relax > n1 * cap) fail("high-high relaxations exceed n_[y][1]*cap");
    }
    ++stats_.bound_checks;
    if (pc.q_additions > pc.optimal) fail("more Q additions than optimal pairs in range");
    if (pc.high_low_relax + pc.q_additions > 2 * pc.optimal * cap + pc.optimal * cap) {
      fail("high-low relaxations exceed 2*n_[y]*cap + visits*cap");
    }
  }
}

// Every final entry must come from a site that matches its last edge's role.
void Solver::check_sites() {
  for (std::size_t p = 0; p < d_.size(); ++p) {
    if (d_[p] == kNoCode) continue;
    const Code code = d_[p];
    bool ok = false;
    switch (site_[p]) {
      case RelaxSite::Edge: {
        const Edge& e = rg_.edge_at(code);
        ok = static_cast<std::size_t>(e.src) == p / nu_ && static_cast<std::size_t>(e.dst) == p % nu_;
        break;
      }
      case RelaxSite::Low:
        ok = tree_.role_of(code) == EdgeRole::Low;
        break;
      case RelaxSite::HighHigh:
        ok = in_high1_[code] != 0;
        break;
      case RelaxSite::HighLowScan:
      case RelaxSite::HighLowWait:
        ok = tree_.role_of(code) == EdgeRole::HighLow;
        break;
      case RelaxSite::None:
        break;
    }
    ++stats_.bound_checks;
    if (!ok) fail("final entry produced by a site inconsistent with its edge role");
  }
}

DirectedResult Solver::run() {
  const Graph& g = rg_.graph();
  if (!g.directed()) throw std::invalid_argument("solve_directed: graph is undirected");
  nu_ = static_cast<std::size_t>(g.n());
  m_ = g.m();
  const double t = cfg_.t();
  cap_ = degree_cap(g.n(), t);

  stats_.n = g.n();
  stats_.m = m_;
  stats_.bits = rg_.bits();
  stats_.cap = cap_;
  stats_.t = t;

  DirectedResult result;
  result.matrix = ApnpMatrix(g.n());
  result.final_site.assign(nu_ * nu_, RelaxSite::None);
  if (m_ == 0) {
    result.stats = stats_;
    return result;
  }

  tree_ = PartitionTree::divide(rg_, cap_);
  const auto nodes = tree_.nodes();
  stats_.tree_nodes = nodes.size();
  stats_.per_prefix.assign(nodes.size(), {});
  low_adj_.resize(nodes.size());
  in_high1_.assign(m_, 0);
  live_.resize(nodes.size());
  init_at_.assign(m_, {});
  hh_at_.assign(m_, {});
  drop_at_.assign(m_, {});
  for (std::size_t idx = 0; idx < nodes.size(); ++idx) {
    const PartitionNode& node = nodes[idx];
    auto& adj = low_adj_[idx];
    for (Code c : node.low) adj.emplace_back(rg_.edge_at(c).src, c);
    std::sort(adj.begin(), adj.end());
    if (!node.high_low.empty()) {
      init_at_[node.range.lo].push_back(static_cast<int>(idx));
      drop_at_[std::min<std::size_t>(node.range.hi, m_ - 1)].push_back(static_cast<int>(idx));
    }
    if (node.child[1] >= 0) {
      hh_at_[code_interval(node.prefix.append(true), rg_.bits()).lo].push_back(static_cast<int>(idx));
      for (Code c : node.high[1]) in_high1_[c] = 1;
    }
  }

  d_.assign(nu_ * nu_, kNoCode);
  visited_.assign(nu_ * nu_, 0);
  site_.assign(nu_ * nu_, RelaxSite::None);
  queue_ = std::make_unique<BucketQueue>(nu_ * nu_, m_);
  visit_codes_.reserve(nu_ * nu_);
  visit_pairs_.reserve(nu_ * nu_);

  for (Code c = 0; c < m_; ++c) {
    const Edge& e = rg_.edge_at(c);
    relax(static_cast<std::size_t>(e.src), static_cast<std::size_t>(e.dst), c, RelaxSite::Edge);
  }

  std::vector<std::uint32_t> bucket;
  for (Code x = 0; x < m_; ++x) {
    x_ = x;
    in_visit_ = false;
    for (int idx : init_at_[x]) init_high_low(idx);
    for (int idx : hh_at_[x]) high_high(idx);
    in_visit_ = true;
    queue_->take(x, bucket);
    for (auto p : bucket) visit(p);
    for (int idx : drop_at_[x]) finish_high_low(idx);
  }

  check_bounds();
  if (cfg_.check_bounds) check_sites();

  for (std::size_t p = 0; p < d_.size(); ++p) {
    if (d_[p] == kNoCode) continue;
    const Edge& e = rg_.edge_at(d_[p]);
    result.matrix.set(static_cast<int>(p / nu_), static_cast<int>(p % nu_), e.weight, e.id);
    result.final_site[p] = site_[p];
  }
  result.stats = std::move(stats_);
  result.tree = std::move(tree_);
  return result;
}

}  // namespace

DirectedResult solve_directed(const RankedGraph& rg, const SolverConfig& cfg) { return Solver(rg, cfg).run(); }

}  // namespace apnp
