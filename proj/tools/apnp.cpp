// apnp: solve, generate, verify and benchmark all-pairs non-decreasing paths.
//
// Exit status: 0 success, 1 verification or internal check failure,
// 2 usage or I/O error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "apnp/bench.hpp"
#include "apnp/generator.hpp"
#include "apnp/solve.hpp"
#include "apnp/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

struct TuningFlags {
  std::optional<double> t_param;
  double omega_eff = 0.0;
  std::string kernel = "packed";

  void add(CLI::App* cmd) {
    cmd->add_option("--t-param", t_param, "Balance exponent t in [0,1]; overrides --omega-eff")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--omega-eff", omega_eff, "Matrix product exponent used for t = (3 - omega)/2 (default: kernel's)");
    cmd->add_option("--kernel", kernel, "Square kernel")->check(CLI::IsMember({"packed", "strassen"}));
  }

  apnp::SolverConfig config() const {
    apnp::SolverConfig cfg;
    cfg.kernel = *apnp::parse_kernel(kernel);
    cfg.omega_eff = omega_eff > 0.0 ? omega_eff : apnp::effective_exponent(cfg.kernel);
    cfg.t_param = t_param;
    return cfg;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"All-pairs non-decreasing paths"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve a graph file");
  std::string input;
  std::string algo_name = "fast";
  std::string stats_path;
  std::string output;
  std::string partition_path;
  bool dense = false;
  bool debug = false;
  std::uint64_t seed = 1;
  TuningFlags solve_tuning;
  solve_cmd->add_option("--input", input, "Graph file")->required();
  solve_cmd->add_option("--algo", algo_name, "fast|naive|sweep|undirected-fast|undirected-basic");
  solve_tuning.add(solve_cmd);
  solve_cmd->add_option("--stats", stats_path, "Write solver counters, one `name value` per line");
  solve_cmd->add_option("--output", output, "Result file (default: stdout)");
  solve_cmd->add_option("--dump-partition", partition_path, "Write the partition tree (fast solver)");
  solve_cmd->add_option("--seed", seed, "Seed for the undirected string fingerprints");
  solve_cmd->add_flag("--dense", dense, "Emit every pair, `inf` when unreachable");
  solve_cmd->add_flag("--debug", debug, "Recheck incremental products and string equalities");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph");
  apnp::GenSpec spec;
  std::optional<double> density;
  bool undirected = false;
  std::string mode = "distinct";
  std::string gen_output;
  gen_cmd->add_option("--n", spec.n, "Vertices")->required();
  auto* m_opt = gen_cmd->add_option("--m", spec.m, "Edges");
  gen_cmd->add_option("--density", density, "Edges as a fraction of a simple graph's maximum")
      ->check(CLI::Range(0.0, 1.0))
      ->excludes(m_opt);
  gen_cmd->add_flag("--undirected", undirected, "Undirected graph");
  gen_cmd->add_flag("--multi", spec.multi, "Allow repeated vertex pairs");
  gen_cmd->add_option("--weights", mode, "distinct|ties")->check(CLI::IsMember({"distinct", "ties"}));
  gen_cmd->add_option("--classes", spec.classes, "Distinct weight values in ties mode");
  gen_cmd->add_option("--seed", spec.seed, "RNG seed");
  gen_cmd->add_option("--output", gen_output, "Graph file (default: stdout)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all solvers");
  apnp::VerifyOptions vopts;
  std::string verify_input;
  std::string verify_output;
  verify_cmd->add_option("--input", verify_input, "Check this graph instead of random trials");
  verify_cmd->add_option("--trials", vopts.trials, "Random trials");
  verify_cmd->add_option("--seed", vopts.seed, "RNG seed");
  verify_cmd->add_option("--max-n", vopts.max_n, "Largest vertex count")->check(CLI::Range(2, 4096));
  verify_cmd->add_flag("--inject-fault", vopts.inject_fault, "Break the fast solver on purpose");
  verify_cmd->add_option("--output", verify_output, "Where to write a counterexample (default: stdout)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time directed solvers on dense random graphs");
  apnp::BenchOptions bopts;
  std::vector<std::string> bench_algos{"fast", "naive"};
  std::string bench_output;
  TuningFlags bench_tuning;
  bench_cmd->add_option("--sizes", bopts.sizes, "Vertex counts")->delimiter(',');
  bench_cmd->add_option("--algos", bench_algos, "Directed algorithms")->delimiter(',');
  bench_cmd->add_option("--reps", bopts.reps, "Repetitions")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bopts.seed, "RNG seed");
  bench_cmd->add_option("--density", bopts.density, "Edge density")->check(CLI::Range(0.0, 1.0));
  bench_tuning.add(bench_cmd);
  bench_cmd->add_option("--output", bench_output, "CSV file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (solve_cmd->parsed()) {
      const auto algo = apnp::parse_algorithm(algo_name);
      if (!algo) throw UsageError("unknown algorithm '" + algo_name + "'");
      const apnp::Graph g = apnp::parse_graph(read_file(input));
      apnp::SolveOptions opts;
      opts.directed = solve_tuning.config();
      opts.directed.verify_incremental = debug;
      opts.undirected.seed = seed;
      opts.undirected.verify_strings = debug;
      const apnp::SolveOutput out = apnp::solve(g, *algo, opts);
      write_output(output, apnp::emit_result(out.matrix, dense));
      if (!stats_path.empty()) write_output(stats_path, out.stats);
      if (!partition_path.empty()) write_output(partition_path, out.partition);
      return kOk;
    }
    if (gen_cmd->parsed()) {
      spec.directed = !undirected;
      spec.mode = mode == "ties" ? apnp::WeightMode::Ties : apnp::WeightMode::Distinct;
      if (density) spec.m = apnp::edges_for_density(spec.n, spec.directed, *density);
      write_output(gen_output, apnp::write_graph(apnp::generate(spec)));
      return kOk;
    }
    if (verify_cmd->parsed()) {
      apnp::VerifyReport report;
      if (!verify_input.empty()) {
        const apnp::Graph g = apnp::parse_graph(read_file(verify_input));
        report.trials = 1;
        if (auto failure = apnp::check_graph(g, vopts)) {
          report.failure = failure;
          report.counterexample = apnp::shrink_counterexample(g, vopts);
        }
      } else {
        report = apnp::run_verify(vopts);
      }
      if (report.ok()) {
        std::cout << report.summary() << '\n';
        return kOk;
      }
      std::cerr << report.summary() << '\n';
      write_output(verify_output, apnp::write_graph(*report.counterexample));
      return kCheckFailed;
    }
    if (bench_cmd->parsed()) {
      bopts.algos.clear();
      for (const auto& name : bench_algos) {
        const auto a = apnp::parse_algorithm(name);
        if (!a || !apnp::is_directed_algorithm(*a)) throw UsageError("bench: unsupported algorithm '" + name + "'");
        bopts.algos.push_back(*a);
      }
      bopts.config = bench_tuning.config();
      write_output(bench_output, apnp::bench_csv(apnp::run_bench(bopts)));
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "apnp: " << e.what() << '\n';
    return kUsage;
  } catch (const apnp::ParseError& e) {
    std::cerr << "apnp: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "apnp: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "apnp: internal check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "apnp: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
