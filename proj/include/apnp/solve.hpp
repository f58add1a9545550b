// Single entry point over all solvers. Graphs with repeated weights are
// reduced, solved, and lifted back automatically.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "apnp/directed_solver.hpp"
#include "apnp/graph.hpp"
#include "apnp/result.hpp"
#include "apnp/undirected_solver.hpp"

namespace apnp {

enum class Algorithm { Fast, Naive, Sweep, UndirectedFast, UndirectedBasic };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);
bool is_directed_algorithm(Algorithm a);

struct SolveOptions {
  SolverConfig directed;
  UndirectedOptions undirected;
};

struct SolveOutput {
  ApnpMatrix matrix;
  bool reduced = false;
  // `name value` lines; empty for solvers without counters.
  std::string stats;
  // Partition tree dump of the fast directed solver.
  std::string partition;
};

// Throws std::invalid_argument when the algorithm does not match the graph's orientation.
SolveOutput solve(const Graph& g, Algorithm algo, const SolveOptions& options = {});

}  // namespace apnp
