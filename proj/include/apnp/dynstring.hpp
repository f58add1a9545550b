/*
  Persistent family of 0/1 strings with fast equality.

  Strings are treaps over single bits. Every node caches its subtree length
  and two polynomial fingerprints modulo 2^61 - 1 with independent random
  bases, so equal() is O(1) and two different strings of equal length collide
  with probability below 2^-64 per comparison. Operations never modify
  existing nodes: every handle keeps its content forever.

  With verify set, every equal() that answers true is confirmed by a full
  comparison and a collision throws std::logic_error.
*/
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apnp/rng.hpp"

namespace apnp {

class StringFamily {
  struct Node;

 public:
  class Handle {
   public:
    Handle() = default;
    [[nodiscard]] std::size_t size() const noexcept;

   private:
    friend class StringFamily;
    explicit Handle(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
  };

  struct Counters {
    std::uint64_t makes = 0;
    std::uint64_t concats = 0;
    std::uint64_t splits = 0;
    std::uint64_t equals = 0;  // includes prefix probes made by first_mismatch
    std::uint64_t mismatch_calls = 0;
    std::uint64_t mismatch_max_equals = 0;  // largest equal count of one first_mismatch
    std::uint64_t verified = 0;
  };

  explicit StringFamily(std::uint64_t seed, bool verify = false);

  Handle make(bool bit);
  Handle concat(const Handle& a, const Handle& b);
  // Prefix of length i and the rest. Requires 1 <= i < size(a).
  std::pair<Handle, Handle> split(const Handle& a, std::size_t i);
  bool equal(const Handle& a, const Handle& b);
  // Smallest differing position. Requires equal lengths.
  std::optional<std::size_t> first_mismatch(const Handle& a, const Handle& b);
  Handle set_bit(const Handle& a, std::size_t i, bool v);
  [[nodiscard]] bool get(const Handle& a, std::size_t i) const;

  // Builds a string in linear time. Requires a non-empty "01" string.
  Handle from_string(std::string_view bits);
  Handle zeros(std::size_t n);
  [[nodiscard]] std::string str(const Handle& a) const;

  [[nodiscard]] const Counters& counters() const noexcept { return counters_; }
  void reset_counters() noexcept { counters_ = {}; }

 private:
  using NodePtr = std::shared_ptr<const Node>;
  struct Hash {
    std::uint64_t h1 = 0;
    std::uint64_t h2 = 0;
    friend bool operator==(const Hash&, const Hash&) = default;
  };

  NodePtr node(bool bit, std::uint64_t priority, NodePtr left, NodePtr right);
  NodePtr merge(const NodePtr& a, const NodePtr& b);
  std::pair<NodePtr, NodePtr> split_node(const NodePtr& t, std::size_t i);
  NodePtr set_node(const NodePtr& t, std::size_t i, bool v);
  // Fingerprint of the first `len` bits.
  Hash prefix_hash(const NodePtr& t, std::size_t len);
  Hash join(const Hash& left, std::size_t right_len, const Hash& right);
  std::uint64_t power(int which, std::size_t k);
  bool same_content(const Handle& a, const Handle& b) const;

  Rng rng_;
  bool verify_;
  std::uint64_t base_[2];
  std::vector<std::uint64_t> pow_[2];
  Counters counters_;
};

}  // namespace apnp
