#include "apnp/bench.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "apnp/generator.hpp"
#include "apnp/oracle.hpp"

namespace apnp {

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  for (auto a : options.algos) {
    if (!is_directed_algorithm(a)) throw std::invalid_argument("bench: only directed algorithms are supported");
  }
  std::vector<BenchRow> rows;
  for (int n : options.sizes) {
    GenSpec spec;
    spec.n = n;
    spec.m = edges_for_density(n, true, options.density);
    spec.seed = options.seed ^ static_cast<std::uint64_t>(n);
    const RankedGraph rg = rank_weights(generate(spec));
    for (auto algo : options.algos) {
      for (int rep = 0; rep < options.reps; ++rep) {
        BenchRow row;
        row.n = n;
        row.m = rg.m();
        row.algo = std::string(algorithm_name(algo));
        row.rep = rep;
        const auto start = std::chrono::steady_clock::now();
        if (algo == Algorithm::Fast) {
          const DirectedResult r = solve_directed(rg, options.config);
          const SolverStats& s = r.stats;
          row.visits = s.visits;
          row.low_relax = s.low_relax;
          row.high_high_relax = s.high_high_relax;
          row.high_low_relax = s.high_low_relax;
          row.relaxations = s.low_relax + s.high_high_relax + s.high_low_relax;
          row.q_additions = s.q_additions;
          row.waiting_insertions = s.waiting_insertions;
          row.matmul_calls = s.matmul_calls;
          row.matmul_cell_ops = s.matmul_cell_ops;
        } else if (algo == Algorithm::Naive) {
          NaiveStats s;
          naive_apnp(rg, &s);
          row.visits = s.visits;
          row.relaxations = s.relaxations;
        } else {
          sweep_apnp(rg);
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = std::string(kBenchHeader) + "\n";
  char seconds[32];
  for (const auto& r : rows) {
    std::snprintf(seconds, sizeof seconds, "%.6f", r.seconds);
    out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + r.algo + ',' + std::to_string(r.rep) + ',' +
           seconds + ',' + std::to_string(r.visits) + ',' + std::to_string(r.relaxations) + ',' +
           std::to_string(r.low_relax) + ',' + std::to_string(r.high_high_relax) + ',' +
           std::to_string(r.high_low_relax) + ',' + std::to_string(r.q_additions) + ',' +
           std::to_string(r.waiting_insertions) + ',' + std::to_string(r.matmul_calls) + ',' +
           std::to_string(r.matmul_cell_ops) + '\n';
  }
  return out;
}

}  // namespace apnp
