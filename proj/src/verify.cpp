#include "apnp/verify.hpp"

#include <sstream>

#include "apnp/generator.hpp"
#include "apnp/oracle.hpp"
#include "apnp/rng.hpp"
#include "apnp/solve.hpp"

namespace apnp {

namespace {

std::string at(int i, int k) { return "(" + std::to_string(i) + "," + std::to_string(k) + ")"; }

SolveOptions options_for(const VerifyOptions& v, double t) {
  SolveOptions o;
  o.directed.t_param = t;
  o.directed.verify_incremental = true;
  o.directed.inject_fault = v.inject_fault;
  o.undirected.verify_strings = true;
  return o;
}

std::string tag(std::string_view algo, std::optional<double> t) {
  std::string s(algo);
  if (t) {
    std::ostringstream os;
    os << " t=" << *t;
    s += os.str();
  }
  return s;
}

}  // namespace

std::string check_walks(const ApnpMatrix& r, const Graph& g) {
  for (int i = 0; i < r.n(); ++i) {
    for (int k = 0; k < r.n(); ++k) {
      if (!r.present(i, k)) continue;
      std::vector<EdgeId> path;
      try {
        path = reconstruct_path(r, g, i, k);
      } catch (const std::exception& e) {
        return "path " + at(i, k) + ": " + e.what();
      }
      if (!is_nondecreasing_walk(g, path, i, k)) return "path " + at(i, k) + " is not a non-decreasing walk";
      if (g.edge(path.back()).weight != *r.opt(i, k)) return "path " + at(i, k) + " ends with the wrong weight";
    }
  }
  return {};
}

std::string check_last_edges(const ApnpMatrix& r, const Graph& g, const ApnpMatrix& truth) {
  for (int i = 0; i < r.n(); ++i) {
    for (int k = 0; k < r.n(); ++k) {
      if (!r.present(i, k)) continue;
      const Edge& e = g.edge(*r.last_edge(i, k));
      const Weight w = *r.opt(i, k);
      VertexId far = -1;
      if (e.dst == k) {
        far = e.src;
      } else if (!g.directed() && e.src == k) {
        far = e.dst;
      } else {
        return "last edge of " + at(i, k) + " does not reach k";
      }
      if (e.weight != w) return "last edge of " + at(i, k) + " has the wrong weight";
      const auto before = truth.opt(i, far);
      if (far != i && !(before && *before <= w)) return "last edge of " + at(i, k) + " cannot follow a walk from i";
    }
  }
  return {};
}

std::string compare_weights(const ApnpMatrix& a, const ApnpMatrix& b) {
  if (a.n() != b.n()) return "size mismatch";
  for (int i = 0; i < a.n(); ++i) {
    for (int k = 0; k < a.n(); ++k) {
      const auto x = a.opt(i, k);
      const auto y = b.opt(i, k);
      if (x != y) {
        auto show = [](std::optional<Weight> w) { return w ? std::to_string(*w) : std::string("inf"); };
        return at(i, k) + ": " + show(x) + " vs " + show(y);
      }
    }
  }
  return {};
}

std::optional<std::string> check_graph(const Graph& g, const VerifyOptions& options) {
  try {
    if (!g.has_distinct_weights()) {
      const ApnpMatrix truth = class_sweep_apnp(g);
      std::vector<std::pair<Algorithm, std::optional<double>>> runs;
      if (g.directed()) {
        for (double t : options.t_values) runs.emplace_back(Algorithm::Fast, t);
        runs.emplace_back(Algorithm::Naive, std::nullopt);
        runs.emplace_back(Algorithm::Sweep, std::nullopt);
      } else {
        runs.emplace_back(Algorithm::UndirectedFast, std::nullopt);
        runs.emplace_back(Algorithm::UndirectedBasic, std::nullopt);
      }
      for (const auto& [algo, t] : runs) {
        const ApnpMatrix r = solve(g, algo, options_for(options, t.value_or(0.0))).matrix;
        if (auto d = compare_weights(r, truth); !d.empty()) return tag(algorithm_name(algo), t) + " vs brute force: " + d;
        if (auto d = check_last_edges(r, g, truth); !d.empty()) return tag(algorithm_name(algo), t) + ": " + d;
      }
      return std::nullopt;
    }

    if (g.directed()) {
      const RankedGraph rg = rank_weights(g);
      const ApnpMatrix ref = sweep_apnp(rg);
      if (auto d = check_walks(ref, g); !d.empty()) return "sweep: " + d;
      if (auto d = describe_difference(naive_apnp(rg), ref); !d.empty()) return "naive vs sweep: " + d;
      if (auto d = compare_weights(ref, class_sweep_apnp(g)); !d.empty()) return "sweep vs brute force: " + d;
      for (double t : options.t_values) {
        const ApnpMatrix r = solve(g, Algorithm::Fast, options_for(options, t)).matrix;
        if (auto d = describe_difference(r, ref); !d.empty()) return tag("fast", t) + " vs sweep: " + d;
      }
      return std::nullopt;
    }

    const ApnpMatrix ref = undirected_basic(g);
    if (auto d = check_walks(ref, g); !d.empty()) return "undirected-basic: " + d;
    if (auto d = compare_weights(ref, class_sweep_apnp(g)); !d.empty()) return "undirected-basic vs brute force: " + d;
    const ApnpMatrix r = solve(g, Algorithm::UndirectedFast, options_for(options, 0.0)).matrix;
    if (auto d = describe_difference(r, ref); !d.empty()) return "undirected-fast vs undirected-basic: " + d;
    return std::nullopt;
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

Graph shrink_counterexample(const Graph& g, const VerifyOptions& options) {
  Graph cur = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t drop = 0; drop < cur.m(); ++drop) {
      Graph smaller(cur.n(), cur.directed(), cur.multi());
      for (const auto& e : cur.edges()) {
        if (static_cast<std::size_t>(e.id) != drop) smaller.add_edge(e.src, e.dst, e.weight);
      }
      if (check_graph(smaller, options)) {
        cur = std::move(smaller);
        changed = true;
        break;
      }
    }
  }
  return cur;
}

std::string VerifyReport::summary() const {
  if (ok()) return "OK, " + std::to_string(trials) + " trials";
  return "FAIL after " + std::to_string(trials) + " trials: " + *failure;
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  Rng rng(options.seed);
  const int max_n = std::max(2, options.max_n);
  constexpr double kDensities[] = {0.0, 0.1, 0.5, 1.0};
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    Rng local = rng.split();
    GenSpec spec;
    spec.n = 2 + static_cast<int>(local.below(static_cast<std::uint64_t>(max_n - 1)));
    spec.directed = trial % 2 == 0;
    const bool ties = trial % 4 >= 2;
    spec.m = edges_for_density(spec.n, spec.directed, kDensities[local.below(4)]);
    spec.mode = ties ? WeightMode::Ties : WeightMode::Distinct;
    spec.classes = std::max<std::size_t>(1, std::min<std::size_t>(spec.m, 1 + local.below(4)));
    const Graph g = generate(spec, local);
    ++report.trials;
    if (auto failure = check_graph(g, options)) {
      report.counterexample = shrink_counterexample(g, options);
      report.failure = check_graph(*report.counterexample, options).value_or(*failure);
      return report;
    }
  }
  return report;
}

}  // namespace apnp
