#include "apnp/dynstring.hpp"

#include <stdexcept>

namespace apnp {

namespace {

constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(p & kMod) + static_cast<std::uint64_t>(p >> 61);
  if (r >= kMod) r -= kMod;
  return r;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = a + b;
  if (r >= kMod) r -= kMod;
  return r;
}

int ceil_log2(std::size_t n) {
  int r = 0;
  while ((std::size_t{1} << r) < n) ++r;
  return r;
}

}  // namespace

struct StringFamily::Node {
  bool bit = false;
  std::uint64_t priority = 0;
  std::size_t size = 1;
  Hash hash;
  NodePtr left;
  NodePtr right;
};

std::size_t StringFamily::Handle::size() const noexcept { return root_ ? root_->size : 0; }

StringFamily::StringFamily(std::uint64_t seed, bool verify) : rng_(seed), verify_(verify) {
  for (int w = 0; w < 2; ++w) {
    // Bases away from 0 and 1 so that digits 1 and 2 never cancel trivially.
    base_[w] = 2 + rng_.below(kMod - 3);
    pow_[w] = {1};
  }
}

std::uint64_t StringFamily::power(int which, std::size_t k) {
  auto& p = pow_[which];
  while (p.size() <= k) p.push_back(mulmod(p.back(), base_[which]));
  return p[k];
}

StringFamily::Hash StringFamily::join(const Hash& left, std::size_t right_len, const Hash& right) {
  return Hash{addmod(mulmod(left.h1, power(0, right_len)), right.h1),
              addmod(mulmod(left.h2, power(1, right_len)), right.h2)};
}

StringFamily::NodePtr StringFamily::node(bool bit, std::uint64_t priority, NodePtr left, NodePtr right) {
  auto n = std::make_shared<Node>();
  n->bit = bit;
  n->priority = priority;
  const std::size_t ls = left ? left->size : 0;
  const std::size_t rs = right ? right->size : 0;
  n->size = ls + 1 + rs;
  const std::uint64_t digit = bit ? 2 : 1;
  Hash h = left ? left->hash : Hash{};
  h = join(h, 1, Hash{digit, digit});
  if (right) h = join(h, rs, right->hash);
  n->hash = h;
  n->left = std::move(left);
  n->right = std::move(right);
  return n;
}

StringFamily::NodePtr StringFamily::merge(const NodePtr& a, const NodePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a->priority >= b->priority) return node(a->bit, a->priority, a->left, merge(a->right, b));
  return node(b->bit, b->priority, merge(a, b->left), b->right);
}

std::pair<StringFamily::NodePtr, StringFamily::NodePtr> StringFamily::split_node(const NodePtr& t, std::size_t i) {
  if (!t) return {nullptr, nullptr};
  const std::size_t ls = t->left ? t->left->size : 0;
  if (i <= ls) {
    auto [l, r] = split_node(t->left, i);
    return {l, node(t->bit, t->priority, r, t->right)};
  }
  auto [l, r] = split_node(t->right, i - ls - 1);
  return {node(t->bit, t->priority, t->left, l), r};
}

StringFamily::NodePtr StringFamily::set_node(const NodePtr& t, std::size_t i, bool v) {
  const std::size_t ls = t->left ? t->left->size : 0;
  if (i < ls) return node(t->bit, t->priority, set_node(t->left, i, v), t->right);
  if (i == ls) return t->bit == v ? t : node(v, t->priority, t->left, t->right);
  return node(t->bit, t->priority, t->left, set_node(t->right, i - ls - 1, v));
}

StringFamily::Hash StringFamily::prefix_hash(const NodePtr& t, std::size_t len) {
  Hash acc;
  const Node* cur = t.get();
  while (len > 0 && cur) {
    const std::size_t ls = cur->left ? cur->left->size : 0;
    if (len <= ls) {
      cur = cur->left.get();
      continue;
    }
    if (cur->left) acc = join(acc, ls, cur->left->hash);
    const std::uint64_t digit = cur->bit ? 2 : 1;
    acc = join(acc, 1, Hash{digit, digit});
    len -= ls + 1;
    cur = cur->right.get();
  }
  return acc;
}

StringFamily::Handle StringFamily::make(bool bit) {
  ++counters_.makes;
  return Handle(node(bit, rng_.next(), nullptr, nullptr));
}

StringFamily::Handle StringFamily::concat(const Handle& a, const Handle& b) {
  ++counters_.concats;
  return Handle(merge(a.root_, b.root_));
}

std::pair<StringFamily::Handle, StringFamily::Handle> StringFamily::split(const Handle& a, std::size_t i) {
  if (i < 1 || i >= a.size()) throw std::out_of_range("StringFamily::split: position out of range");
  ++counters_.splits;
  auto [l, r] = split_node(a.root_, i);
  return {Handle(std::move(l)), Handle(std::move(r))};
}

bool StringFamily::same_content(const Handle& a, const Handle& b) const { return str(a) == str(b); }

bool StringFamily::equal(const Handle& a, const Handle& b) {
  ++counters_.equals;
  if (a.size() != b.size()) return false;
  if (a.root_ == b.root_) return true;
  const bool eq = a.root_->hash == b.root_->hash;
  if (eq && verify_) {
    ++counters_.verified;
    if (!same_content(a, b)) throw std::logic_error("StringFamily: fingerprint collision");
  }
  return eq;
}

std::optional<std::size_t> StringFamily::first_mismatch(const Handle& a, const Handle& b) {
  if (a.size() != b.size()) throw std::invalid_argument("first_mismatch: length mismatch");
  ++counters_.mismatch_calls;
  const std::uint64_t before = counters_.equals;
  if (equal(a, b)) return std::nullopt;
  // Invariant: the first `lo` bits agree, the first `hi` bits do not.
  std::size_t lo = 0;
  std::size_t hi = a.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++counters_.equals;
    if (prefix_hash(a.root_, mid) == prefix_hash(b.root_, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const std::uint64_t used = counters_.equals - before;
  counters_.mismatch_max_equals = std::max(counters_.mismatch_max_equals, used);
  if (used > static_cast<std::uint64_t>(2 * ceil_log2(a.size()) + 4)) {
    throw std::logic_error("first_mismatch: too many equality tests");
  }
  if (verify_) {
    ++counters_.verified;
    const std::string sa = str(a);
    const std::string sb = str(b);
    if (sa.compare(0, lo, sb, 0, lo) != 0 || sa[lo] == sb[lo]) {
      throw std::logic_error("StringFamily: fingerprint collision");
    }
  }
  return lo;
}

StringFamily::Handle StringFamily::set_bit(const Handle& a, std::size_t i, bool v) {
  if (i >= a.size()) throw std::out_of_range("StringFamily::set_bit: position out of range");
  return Handle(set_node(a.root_, i, v));
}

bool StringFamily::get(const Handle& a, std::size_t i) const {
  if (i >= a.size()) throw std::out_of_range("StringFamily::get: position out of range");
  const Node* cur = a.root_.get();
  for (;;) {
    const std::size_t ls = cur->left ? cur->left->size : 0;
    if (i < ls) {
      cur = cur->left.get();
    } else if (i == ls) {
      return cur->bit;
    } else {
      i -= ls + 1;
      cur = cur->right.get();
    }
  }
}

StringFamily::Handle StringFamily::from_string(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("StringFamily: strings are non-empty");
  // Cartesian tree over random priorities. The spine holds the nodes still
  // open to the right; nodes are rebuilt bottom-up once their subtree closes.
  struct Open {
    bool bit;
    std::uint64_t priority;
    NodePtr left;
  };
  std::vector<Open> spine;
  NodePtr carried;
  auto close = [&]() {
    Open o = std::move(spine.back());
    spine.pop_back();
    carried = node(o.bit, o.priority, std::move(o.left), std::move(carried));
  };
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("StringFamily: expected '0' or '1'");
    const std::uint64_t pr = rng_.next();
    carried = nullptr;
    while (!spine.empty() && spine.back().priority < pr) close();
    spine.push_back(Open{ch == '1', pr, std::move(carried)});
    carried = nullptr;
  }
  while (!spine.empty()) close();
  ++counters_.makes;
  return Handle(std::move(carried));
}

StringFamily::Handle StringFamily::zeros(std::size_t n) { return from_string(std::string(n, '0')); }

std::string StringFamily::str(const Handle& a) const {
  std::string out;
  out.reserve(a.size());
  std::vector<const Node*> stack;
  const Node* cur = a.root_.get();
  while (cur || !stack.empty()) {
    while (cur) {
      stack.push_back(cur);
      cur = cur->left.get();
    }
    cur = stack.back();
    stack.pop_back();
    out.push_back(cur->bit ? '1' : '0');
    cur = cur->right.get();
  }
  return out;
}

}  // namespace apnp
