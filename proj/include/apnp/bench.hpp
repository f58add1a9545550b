// Timing runs over generated directed graphs, one CSV row per (size, algo, rep).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apnp/solve.hpp"

namespace apnp {

struct BenchOptions {
  std::vector<int> sizes{128, 256, 512};
  std::vector<Algorithm> algos{Algorithm::Fast, Algorithm::Naive};
  int reps = 1;
  std::uint64_t seed = 1;
  double density = 1.0;
  SolverConfig config;
};

struct BenchRow {
  int n = 0;
  std::size_t m = 0;
  std::string algo;
  int rep = 0;
  double seconds = 0.0;
  std::uint64_t visits = 0;
  std::uint64_t relaxations = 0;
  std::uint64_t low_relax = 0;
  std::uint64_t high_high_relax = 0;
  std::uint64_t high_low_relax = 0;
  std::uint64_t q_additions = 0;
  std::uint64_t waiting_insertions = 0;
  std::uint64_t matmul_calls = 0;
  std::uint64_t matmul_cell_ops = 0;
};

// Column order of bench_csv, without the trailing newline.
inline constexpr const char* kBenchHeader =
    "n,m,algo,rep,seconds,visits,relaxations,low_relax,high_high_relax,high_low_relax,q_additions,"
    "waiting_insertions,matmul_calls,matmul_cell_ops";

// Only directed algorithms are accepted.
std::vector<BenchRow> run_bench(const BenchOptions& options);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace apnp
