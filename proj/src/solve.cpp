#include "apnp/solve.hpp"

#include <sstream>
#include <stdexcept>

#include "apnp/oracle.hpp"
#include "apnp/tie_reduction.hpp"

namespace apnp {

namespace {

constexpr std::pair<std::string_view, Algorithm> kNames[] = {
    {"fast", Algorithm::Fast},
    {"naive", Algorithm::Naive},
    {"sweep", Algorithm::Sweep},
    {"undirected-fast", Algorithm::UndirectedFast},
    {"undirected-basic", Algorithm::UndirectedBasic},
};

SolveOutput solve_distinct(const Graph& g, Algorithm algo, const SolveOptions& options) {
  SolveOutput out;
  switch (algo) {
    case Algorithm::Fast: {
      DirectedResult r = solve_directed(rank_weights(g), options.directed);
      out.matrix = std::move(r.matrix);
      out.stats = r.stats.lines();
      out.partition = r.tree.dump();
      break;
    }
    case Algorithm::Naive: {
      NaiveStats st;
      out.matrix = naive_apnp(rank_weights(g), &st);
      out.stats = "visits " + std::to_string(st.visits) + "\nrelaxations " + std::to_string(st.relaxations) + "\n";
      break;
    }
    case Algorithm::Sweep:
      out.matrix = sweep_apnp(rank_weights(g));
      break;
    case Algorithm::UndirectedFast: {
      UndirectedStats st;
      out.matrix = solve_undirected(g, options.undirected, &st);
      std::ostringstream s;
      s << "edges " << st.edges << "\nflips " << st.flips << "\nmismatches " << st.mismatches << "\nequal_calls "
        << st.equal_calls << "\nmismatch_max_equals " << st.mismatch_max_equals << '\n';
      out.stats = s.str();
      break;
    }
    case Algorithm::UndirectedBasic:
      out.matrix = undirected_basic(g);
      break;
  }
  return out;
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [n, a] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm a) {
  for (const auto& [n, v] : kNames) {
    if (v == a) return n;
  }
  return "?";
}

bool is_directed_algorithm(Algorithm a) {
  return a == Algorithm::Fast || a == Algorithm::Naive || a == Algorithm::Sweep;
}

SolveOutput solve(const Graph& g, Algorithm algo, const SolveOptions& options) {
  if (is_directed_algorithm(algo) != g.directed()) {
    throw std::invalid_argument(std::string("algorithm '") + std::string(algorithm_name(algo)) + "' needs a" +
                                (g.directed() ? "n undirected" : " directed") + " graph");
  }
  if (g.has_distinct_weights()) return solve_distinct(g, algo, options);
  const Reduction red = reduce(g);
  SolveOutput out = solve_distinct(red.graph, algo, options);
  out.matrix = lift_answers(out.matrix, red.graph, red.map);
  out.reduced = true;
  return out;
}

}  // namespace apnp
