#include "apnp/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace apnp {

int degree_cap(int n, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("balance parameter t must lie in [0, 1]");
  if (n <= 1) return 1;
  // The epsilon keeps exact powers (64^0.5 = 8) from rounding up.
  const double raw = std::pow(static_cast<double>(n), 1.0 - t);
  return std::max(1, static_cast<int>(std::ceil(raw - 1e-9)));
}

namespace {

bool code_bit(Code c, int bits, int pos) { return ((c >> (bits - 1 - pos)) & 1U) != 0; }

}  // namespace

PartitionTree PartitionTree::divide(const RankedGraph& rg, int cap) {
  if (cap < 1) throw std::invalid_argument("degree cap must be >= 1");
  PartitionTree tree;
  tree.cap_ = cap;
  tree.bits_ = rg.bits();
  const std::size_t m = rg.m();
  tree.home_.assign(m, -1);
  tree.role_.assign(m, EdgeRole::Low);

  std::vector<int> outdeg(static_cast<std::size_t>(rg.n()), 0);
  std::vector<int> indeg(static_cast<std::size_t>(rg.n()), 0);

  struct Work {
    int parent;
    int bit;
    BitString prefix;
    std::vector<Code> input;
  };
  std::vector<Work> stack;
  {
    std::vector<Code> all(m);
    for (std::size_t c = 0; c < m; ++c) all[c] = static_cast<Code>(c);
    stack.push_back(Work{-1, 0, BitString{}, std::move(all)});
  }

  while (!stack.empty()) {
    Work w = std::move(stack.back());
    stack.pop_back();
    const int idx = static_cast<int>(tree.nodes_.size());

    PartitionNode node;
    node.prefix = w.prefix;
    node.range = code_interval(w.prefix, tree.bits_);
    node.parent = w.parent;

    for (Code c : w.input) {
      const Edge& e = rg.edge_at(c);
      ++outdeg[static_cast<std::size_t>(e.src)];
      ++indeg[static_cast<std::size_t>(e.dst)];
    }
    const int depth = w.prefix.size();
    for (Code c : w.input) {
      const Edge& e = rg.edge_at(c);
      if (outdeg[static_cast<std::size_t>(e.src)] <= cap) {
        node.low.push_back(c);
        tree.home_[c] = idx;
        tree.role_[c] = EdgeRole::Low;
      } else if (indeg[static_cast<std::size_t>(e.dst)] <= cap) {
        node.high_low.push_back(c);
        tree.home_[c] = idx;
        tree.role_[c] = EdgeRole::HighLow;
      } else {
        if (depth >= tree.bits_) throw std::logic_error("high-high edge at a full-length prefix");
        node.high[code_bit(c, tree.bits_, depth) ? 1 : 0].push_back(c);
      }
    }
    for (Code c : w.input) {
      const Edge& e = rg.edge_at(c);
      outdeg[static_cast<std::size_t>(e.src)] = 0;
      indeg[static_cast<std::size_t>(e.dst)] = 0;
    }

    if (w.parent >= 0) tree.nodes_[static_cast<std::size_t>(w.parent)].child[static_cast<std::size_t>(w.bit)] = idx;
    // Child 1 is pushed first so that nodes come out in preorder, 0 before 1.
    for (int bit = 1; bit >= 0; --bit) {
      if (!node.high[static_cast<std::size_t>(bit)].empty()) {
        stack.push_back(Work{idx, bit, w.prefix.append(bit == 1), node.high[static_cast<std::size_t>(bit)]});
      }
    }
    tree.nodes_.push_back(std::move(node));
  }
  return tree;
}

int PartitionTree::find(const BitString& prefix) const {
  if (nodes_.empty()) return -1;
  int idx = 0;
  for (int i = 0; i < prefix.size() && idx >= 0; ++i) {
    idx = nodes_[static_cast<std::size_t>(idx)].child[prefix.bit(i) ? 1 : 0];
  }
  return idx;
}

std::string PartitionTree::dump() const {
  std::string out;
  for (const auto& node : nodes_) {
    out += node.prefix.empty() ? std::string("-") : node.prefix.str();
    out += ' ' + std::to_string(node.low.size());
    out += ' ' + std::to_string(node.high_low.size());
    out += ' ' + std::to_string(node.high[0].size());
    out += ' ' + std::to_string(node.high[1].size());
    out += '\n';
  }
  return out;
}

PartitionTree divide_edges(const RankedGraph& rg, double t) {
  return PartitionTree::divide(rg, degree_cap(rg.n(), t));
}

int BalancedSide::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

BalancedSide balance(const RankedGraph& rg, std::span<const Code> edges, Side side, int cap) {
  if (cap < 1) throw std::invalid_argument("balance: cap must be >= 1");
  BalancedSide out;
  out.side_ = side;
  out.cap_ = cap;
  out.edges_.assign(edges.begin(), edges.end());
  auto key = [&](Code c) {
    const Edge& e = rg.edge_at(c);
    return side == Side::In ? e.dst : e.src;
  };
  // S1: group by vertex, ascending codes inside each group.
  std::sort(out.edges_.begin(), out.edges_.end(), [&](Code a, Code b) {
    const auto ka = key(a);
    const auto kb = key(b);
    return ka != kb ? ka < kb : a < b;
  });
  // S2/S3: cut each group into runs of `cap` and record their code ranges.
  std::size_t i = 0;
  while (i < out.edges_.size()) {
    const VertexId v = key(out.edges_[i]);
    std::size_t j = i;
    while (j < out.edges_.size() && key(out.edges_[j]) == v) ++j;
    out.vertices_.push_back(v);
    out.offsets_.push_back(static_cast<std::uint32_t>(out.segments_.size()));
    for (std::size_t s = i; s < j; s += static_cast<std::size_t>(cap)) {
      const std::size_t e = std::min(j, s + static_cast<std::size_t>(cap));
      out.segments_.push_back(Segment{v, out.edges_[s], out.edges_[e - 1], static_cast<std::uint32_t>(s),
                                      static_cast<std::uint32_t>(e)});
    }
    i = j;
  }
  out.offsets_.push_back(static_cast<std::uint32_t>(out.segments_.size()));
  return out;
}

}  // namespace apnp
