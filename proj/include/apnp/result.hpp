/*
  APNP result matrix: per ordered pair (i, k) the weight of the best
  non-decreasing path and the last edge used, or nothing if no such path
  exists. The empty path does not count, so (i, i) is only present when a
  non-empty non-decreasing closed walk through i exists.
*/
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "apnp/graph.hpp"

namespace apnp {

class ApnpMatrix {
 public:
  ApnpMatrix() = default;
  explicit ApnpMatrix(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::optional<Weight> opt(int i, int k) const;
  [[nodiscard]] std::optional<EdgeId> last_edge(int i, int k) const;
  [[nodiscard]] bool present(int i, int k) const { return last_[index(i, k)] >= 0; }
  [[nodiscard]] std::size_t entries() const;

  void set(int i, int k, Weight w, EdgeId last);
  void clear(int i, int k);

  friend bool operator==(const ApnpMatrix&, const ApnpMatrix&) = default;

 private:
  [[nodiscard]] std::size_t index(int i, int k) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k);
  }

  int n_ = 0;
  std::vector<Weight> weight_;
  std::vector<EdgeId> last_;
};

// Sparse triples "i j w" in (i, j) order, one per line. With dense=true every
// pair is written and missing entries read "inf".
std::string emit_result(const ApnpMatrix& r, bool dense = false);

// Walks last-edge links back from (i, k). For undirected graphs the previous
// vertex is the far endpoint of the last edge. Throws std::out_of_range if
// (i, k) is absent and std::logic_error if the links are inconsistent.
std::vector<EdgeId> reconstruct_path(const ApnpMatrix& r, const Graph& g, int i, int k);

// True if `path` is a walk from i to k in g with non-decreasing weights.
bool is_nondecreasing_walk(const Graph& g, const std::vector<EdgeId>& path, int i, int k);

// Human-readable first difference between two matrices, empty if equal.
std::string describe_difference(const ApnpMatrix& a, const ApnpMatrix& b);

}  // namespace apnp
