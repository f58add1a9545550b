/*
  Differential checking of every solver against the reference solvers, and
  the harness behind `apnp verify`.

  Trials rotate through four families: directed and undirected graphs with
  distinct weights, and both orientations with heavy ties. Failing graphs are
  shrunk by deleting edges one at a time while the failure persists.
*/
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apnp/graph.hpp"
#include "apnp/result.hpp"

namespace apnp {

// Every present entry of r reconstructs to a non-decreasing walk of g ending
// with the recorded last edge. Returns the first problem, or "".
std::string check_walks(const ApnpMatrix& r, const Graph& g);

// Weaker check for results lifted through the tie reduction: each last edge
// enters k (or touches it, undirected), carries weight opt(i, k), and its far
// endpoint is i or reachable from i with weight <= opt(i, k) according to `truth`.
std::string check_last_edges(const ApnpMatrix& r, const Graph& g, const ApnpMatrix& truth);

// Entry-by-entry comparison of weights only.
std::string compare_weights(const ApnpMatrix& a, const ApnpMatrix& b);

struct VerifyOptions {
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  int max_n = 24;
  // t values tried by the fast directed solver on each trial.
  std::vector<double> t_values{0.0, 0.5, 0.75, 1.0};
  bool inject_fault = false;
};

// All solvers that apply to g, cross-checked. Returns the first failure.
std::optional<std::string> check_graph(const Graph& g, const VerifyOptions& options = {});

// Greedy edge deletion while check_graph keeps failing.
Graph shrink_counterexample(const Graph& g, const VerifyOptions& options = {});

struct VerifyReport {
  std::size_t trials = 0;
  std::optional<std::string> failure;
  std::optional<Graph> counterexample;
  [[nodiscard]] bool ok() const { return !failure.has_value(); }
  // "OK, T trials" or "FAIL after T trials: ...".
  [[nodiscard]] std::string summary() const;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace apnp
