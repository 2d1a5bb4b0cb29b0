// Command-line front end: replay, fuzz, bench, satcheck.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "csst/harness/bench.hpp"
#include "csst/harness/fuzz.hpp"
#include "csst/harness/oplog.hpp"
#include "csst/harness/replay.hpp"
#include "csst/harness/satcheck.hpp"

namespace h = csst::harness;

namespace {

std::vector<std::string> backend_names() {
  std::vector<std::string> names;
  for (const auto id : csst::all_backends()) names.emplace_back(csst::to_string(id));
  return names;
}

csst::BackendId backend_of(const std::string& name) { return *csst::parse_backend(name); }

int run_replay(const std::string& path, csst::BackendId backend, bool check_oracle) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return h::kExitUsage;
  }
  std::vector<h::OpRecord> ops;
  try {
    ops = h::parse_oplog(in);
  } catch (const h::ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return h::kExitUsage;
  }
  h::ReplayOptions options;
  options.backend = backend;
  options.check_oracle = check_oracle;
  return h::replay(ops, options, std::cout, std::cerr);
}

int run_satcheck(const std::string& path, bool explain) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return h::kExitUsage;
  }
  h::Trace trace;
  try {
    trace = h::parse_trace(in);
  } catch (const h::ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return h::kExitUsage;
  }
  const h::SatResult result = h::satcheck(trace);
  if (explain) {
    for (const auto& line : result.log) std::cerr << line << '\n';
  }
  std::cout << h::format_result(result);
  return h::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collective sparse segment trees: replay, fuzz, bench, satcheck"};
  app.require_subcommand(1);
  const auto backends = CLI::IsMember(backend_names());

  std::string replay_path;
  std::string replay_backend = "csst-dyn";
  bool check_oracle = false;
  auto* replay = app.add_subcommand("replay", "Run an op-log against a backend");
  replay->add_option("ops", replay_path, "Op-log file")->required();
  replay->add_option("--backend", replay_backend, "Backend id")->check(backends);
  replay->add_flag("--check-oracle", check_oracle, "Shadow every operation into the oracle");

  h::FuzzOptions fuzz;
  std::vector<std::string> fuzz_backends;
  std::string repro_path;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Differential fuzzing against the oracle");
  fuzz_cmd->add_option("--k", fuzz.k, "Chains")->check(CLI::Range(1, 64));
  fuzz_cmd->add_option("--max-len", fuzz.max_len, "Events per chain")->check(CLI::Range(1, 2048));
  fuzz_cmd->add_option("--ops", fuzz.n_ops, "Operations to generate");
  fuzz_cmd->add_option("--seed", fuzz.seed, "PRNG seed")->required();
  fuzz_cmd->add_flag("--decremental", fuzz.decremental, "Mix in edge deletions");
  fuzz_cmd->add_option("--window", fuzz.window, "Maximum |i-j| of generated edges");
  fuzz_cmd->add_option("--backends", fuzz_backends, "Backends under test")
      ->check(backends)
      ->delimiter(',');
  fuzz_cmd->add_option("--reproducer", repro_path, "Write the shrunk reproducer here on failure");

  h::BenchConfig bench;
  std::string bench_backend = "csst-dyn";
  std::string workload_path;
  bool header = true;
  auto* bench_cmd = app.add_subcommand("bench", "Scalability benchmark, CSV on stdout");
  bench_cmd->add_option("--k", bench.k, "Chains")->check(CLI::Range(2, 1024));
  bench_cmd->add_option("--ell", bench.ell, "Events per chain")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--window", bench.window, "Maximum |i-j| of generated edges")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--insert-factor", bench.insert_factor, "Attempts per event")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--queries", bench.queries, "Timed reachability queries")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "PRNG seed")->required();
  bench_cmd->add_option("--backend", bench_backend, "Backend id")->check(backends);
  bench_cmd->add_option("--workload-out", workload_path, "Write the inserted edges as an op-log");
  bench_cmd->add_flag("!--no-header", header, "Omit the CSV header");

  std::string trace_path;
  bool explain = false;
  auto* sat = app.add_subcommand("satcheck", "Sequential-consistency check of a trace");
  sat->add_option("trace", trace_path, "Trace file")->required();
  sat->add_flag("--explain", explain, "Log every reads-from decision to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? h::kExitOk : h::kExitUsage;
  }

  if (*replay) return run_replay(replay_path, backend_of(replay_backend), check_oracle);
  if (*fuzz_cmd) {
    for (const auto& name : fuzz_backends) fuzz.backends.push_back(backend_of(name));
    const h::FuzzReport report = h::fuzz(fuzz);
    std::cout << h::describe(report, fuzz);
    if (!report.passed && !repro_path.empty()) {
      std::ofstream(repro_path) << h::format_oplog(report.reproducer);
    }
    return report.passed ? h::kExitOk : h::kExitMismatch;
  }
  if (*bench_cmd) {
    bench.backend = backend_of(bench_backend);
    const h::BenchResult result = h::run_bench(bench);
    if (header) std::cout << h::csv_header() << '\n';
    std::cout << h::to_csv_row(result) << '\n';
    if (!workload_path.empty()) {
      std::vector<h::OpRecord> ops{h::OpRecord::init(std::vector<csst::Index>(bench.k, bench.ell))};
      for (const auto& [u, v] : result.edges) ops.push_back(h::OpRecord::insert(u, v));
      std::ofstream(workload_path) << h::format_oplog(ops);
    }
    return h::kExitOk;
  }
  if (*sat) return run_satcheck(trace_path, explain);
  return h::kExitUsage;
}
