#include "apnp/undirected_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "apnp/tie_reduction.hpp"

namespace apnp {

UndirectedFastSolver::UndirectedFastSolver(int n, const UndirectedOptions& options)
    : n_(n), family_(options.seed, options.verify_strings) {
  columns_.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::string bits(static_cast<std::size_t>(n), '0');
    bits[static_cast<std::size_t>(v)] = '1';
    columns_.push_back(family_.from_string(bits));
  }
}

void UndirectedFastSolver::insert(const Edge& e, ApnpMatrix& out) {
  ++stats_.edges;
  auto& bi = columns_[static_cast<std::size_t>(e.src)];
  auto& bj = columns_[static_cast<std::size_t>(e.dst)];
  while (!family_.equal(bi, bj)) {
    const auto s = *family_.first_mismatch(bi, bj);
    ++stats_.mismatches;
    const int si = static_cast<int>(s);
    // Exactly one side is missing bit s; the other already reaches its endpoint.
    if (!family_.get(bi, s)) {
      bi = family_.set_bit(bi, s, true);
      if (!out.present(si, e.src)) out.set(si, e.src, e.weight, e.id);
    } else {
      bj = family_.set_bit(bj, s, true);
      if (!out.present(si, e.dst)) out.set(si, e.dst, e.weight, e.id);
    }
    ++stats_.flips;
    // The start of a walk out and back along e.
    if (si == e.src || si == e.dst) {
      if (!out.present(si, si)) out.set(si, si, e.weight, e.id);
    }
  }
  if (stats_.flips > static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(n_)) {
    throw std::logic_error("undirected solver: more than n^2 bit flips");
  }
}

bool UndirectedFastSolver::reaches(int s, int v) const {
  return family_.get(columns_[static_cast<std::size_t>(v)], static_cast<std::size_t>(s));
}

UndirectedStats UndirectedFastSolver::stats() const {
  UndirectedStats s = stats_;
  s.equal_calls = family_.counters().equals;
  s.mismatch_max_equals = family_.counters().mismatch_max_equals;
  return s;
}

ApnpMatrix solve_undirected(const Graph& g, const UndirectedOptions& options, UndirectedStats* stats) {
  if (g.directed()) throw std::invalid_argument("solve_undirected: graph is directed");
  if (!g.has_distinct_weights()) {
    const Reduction red = reduce_undirected(g);
    const ApnpMatrix h = solve_undirected(red.graph, options, stats);
    return lift_answers(h, red.graph, red.map);
  }
  std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
  std::sort(sorted.begin(), sorted.end(), [](const Edge& a, const Edge& b) { return a.weight < b.weight; });
  ApnpMatrix out(g.n());
  UndirectedFastSolver solver(g.n(), options);
  for (const auto& e : sorted) solver.insert(e, out);
  if (stats) *stats = solver.stats();
  return out;
}

}  // namespace apnp
