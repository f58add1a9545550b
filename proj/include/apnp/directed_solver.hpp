/*
  Fast directed APNP.

  Pairs (i, j) are visited in ascending code order from a bucket queue, as in
  the naive search, but the out-edges of j are split by the partition tree:

    L[y]       relaxed edge by edge at every visit whose code has prefix [y]
    H'[y][1]   relaxed in one batch when the loop reaches the first code of
               [y][1], by a counting product of (paths with prefix [y][0]) x
               (balanced in-side of H'[y][1])
    Gamma[y]   handled by a structure built at the first code of [y] that
               keeps C = A.B under single-entry updates of A, a set Q of
               pairs already discovered inside [y], and waiting lists for
               edges that must be replayed once a lighter predecessor is visited.

  With check_bounds set, the work counters are compared against their bounds
  and any violation throws std::logic_error.
*/
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apnp/boolmat.hpp"
#include "apnp/graph.hpp"
#include "apnp/partition.hpp"
#include "apnp/result.hpp"

namespace apnp {

struct SolverConfig {
  double omega_eff = 3.0;
  std::optional<double> t_param;
  Kernel kernel = Kernel::Packed;
  bool check_bounds = true;
  // Recompute every high-low product from scratch when its prefix ends.
  bool verify_incremental = false;
  // Deliberately wrong low relaxation, used to exercise the verify harness.
  bool inject_fault = false;

  // Explicit t, else (3 - omega_eff) / 2 clamped to [0, 1].
  [[nodiscard]] double t() const;
};

enum class RelaxSite : std::uint8_t { None, Edge, Low, HighHigh, HighLowScan, HighLowWait };

struct PrefixCounters {
  std::uint64_t optimal = 0;  // n_[y]: visited pairs whose code has prefix [y]
  std::uint64_t high_high_relax = 0;
  std::uint64_t high_low_relax = 0;
  std::uint64_t q_additions = 0;
  std::uint64_t waiting_insertions = 0;
};

struct SolverStats {
  int n = 0;
  std::size_t m = 0;
  int bits = 0;
  int cap = 0;
  double t = 0.0;
  std::size_t tree_nodes = 0;
  std::uint64_t visits = 0;
  std::uint64_t low_relax = 0;
  std::uint64_t low_relax_max_per_visit = 0;
  std::uint64_t high_high_batches = 0;
  std::uint64_t high_high_relax = 0;
  std::uint64_t high_low_structs = 0;
  std::uint64_t high_low_relax = 0;
  std::uint64_t q_additions = 0;
  std::uint64_t waiting_insertions = 0;
  std::uint64_t waiting_max_per_q = 0;
  std::uint64_t matmul_calls = 0;
  std::uint64_t matmul_cell_ops = 0;
  std::uint64_t max_live_structs = 0;
  std::uint64_t incremental_checks = 0;
  std::uint64_t bound_checks = 0;
  // Indexed like PartitionTree::nodes().
  std::vector<PrefixCounters> per_prefix;

  // `name value` lines in a fixed order.
  [[nodiscard]] std::string lines() const;
};

struct DirectedResult {
  ApnpMatrix matrix;
  SolverStats stats;
  PartitionTree tree;
  // Row-major n x n; the site that produced each final entry.
  std::vector<RelaxSite> final_site;
};

// Requires a directed graph. Throws std::logic_error if an internal check fails.
DirectedResult solve_directed(const RankedGraph& rg, const SolverConfig& cfg = {});

}  // namespace apnp
