// Copyright 2026 The sctcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sctcount: exact k-clique counts (global, per-vertex, per-edge) for all k.
//
//   sctcount count <graph|-> [--per-vertex] [--per-edge] [--max-k K] [--threads N]
//                  [--format csv|json] [--output PATH] [--report PATH]
//                  [--verify] [--sct-stats] [--exact|--fast-counters]
//   sctcount stats <graph|-> [--report PATH]
//   sctcount verify <graph|-> [--limit N]
//   sctcount inspect-sct <graph|-> [--format text|nodes] [--cap N] [--output PATH]
//
// Exit status: 0 ok, 1 input/runtime error, 2 usage error, 3 oracle mismatch.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "sct/counting.hpp"
#include "sct/degeneracy.hpp"
#include "sct/errors.hpp"
#include "sct/graph.hpp"
#include "sct/oracle.hpp"
#include "sct/output.hpp"
#include "sct/sct_tree.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

sct::Graph load(const std::string& input) {
  if (input == "-") return sct::load_edge_list(std::cin);
  return sct::load_edge_list_file(input);
}

// Opens PATH for writing, or returns stdout when PATH is empty.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct CountArgs {
  std::string input;
  bool per_vertex = false;
  bool per_edge = false;
  std::optional<std::size_t> max_k;
  std::size_t threads = std::max(1U, std::thread::hardware_concurrency());
  std::string format = "csv";
  std::string output;
  std::string report;
  bool verify = false;
  bool sct_stats = false;
  bool exact = false;
  bool fast = false;
};

int run_count(const CountArgs& args) {
  sct::RunReport report;
  report.input = args.input;

  auto t0 = Clock::now();
  const sct::Graph g = load(args.input);
  report.load_seconds = seconds_since(t0);
  report.n = g.vertex_count();
  report.m = g.edge_count();

  t0 = Clock::now();
  const sct::DegeneracyOrientation o = sct::degeneracy_orient(g);
  report.orient_seconds = seconds_since(t0);
  const auto dstats = sct::degeneracy_stats(o);
  report.alpha = dstats.alpha;
  report.max_core_size = dstats.max_core_size;

  sct::CountOptions options;
  options.scope = {args.per_vertex, args.per_edge};
  options.max_k = args.max_k;
  options.threads = args.threads;
  options.counters = args.fast ? sct::CounterKind::fast128 : sct::CounterKind::exact;
  t0 = Clock::now();
  const sct::CountRun run = sct::count_with_orientation(g, o, options);
  report.count_seconds = seconds_since(t0);
  report.max_clique = sct::max_clique_size(run.tables);
  report.sct_nodes = run.sct.node_count;
  report.sct_leaves = run.sct.leaf_count;
  report.sct_depth = run.sct.max_depth;
  report.threads = run.threads_used;
  report.max_k = args.max_k;
  report.counters = args.fast ? "fast128" : "exact";
  report.mode = args.per_vertex && args.per_edge ? "per-vertex+per-edge"
                : args.per_vertex                ? "per-vertex"
                : args.per_edge                  ? "per-edge"
                                                 : "global";

  t0 = Clock::now();
  {
    Sink out(args.output);
    if (args.format == "json") {
      sct::write_json(out.stream(), g, run.tables);
    } else {
      const bool sections = args.per_vertex || args.per_edge;
      if (sections) out.stream() << "# global\n";
      sct::write_global_csv(out.stream(), run.tables);
      if (args.per_vertex) {
        out.stream() << "# per-vertex\n";
        sct::write_per_vertex_csv(out.stream(), g, run.tables);
      }
      if (args.per_edge) {
        out.stream() << "# per-edge\n";
        sct::write_per_edge_csv(out.stream(), g, run.tables);
      }
    }
    out.stream().flush();
  }
  report.output_seconds = seconds_since(t0);

  if (args.sct_stats) std::cerr << "m,sct_nodes,sct_leaves\n" << report.m << ',' << report.sct_nodes << ','
                                << report.sct_leaves << '\n';
  if (args.report.empty()) {
    std::cerr << report.to_json() << '\n';
  } else {
    Sink rep(args.report);
    rep.stream() << report.to_json() << '\n';
  }

  if (args.verify) {
    const auto census = sct::oracle::enumerate_all_cliques(g);
    // A truncated run is checked as the k-prefix of a verified full run.
    const auto full = args.max_k ? sct::count(g, {options.scope, std::nullopt, 1, options.counters}) : run.tables;
    auto verdict = sct::oracle::compare(census, full);
    if (verdict.pass && args.max_k && sct::truncate(full, *args.max_k) != run.tables) {
      verdict.pass = false;
      verdict.first.push_back({"global", *args.max_k, 0, "k-prefix of the full run", "different tables"});
    }
    std::cerr << "verify: " << verdict.describe() << '\n';
    if (!verdict.pass) return kExitMismatch;
  }
  return 0;
}

int run_stats(const std::string& input, const std::string& report_path) {
  const sct::Graph g = load(input);
  const auto o = sct::degeneracy_orient(g);
  const auto stats = sct::degeneracy_stats(o);
  Sink out(report_path);
  out.stream() << "n," << g.vertex_count() << "\nm," << g.edge_count() << "\ndegeneracy," << stats.alpha
               << "\nmax_core_size," << stats.max_core_size << "\nmax_degree," << g.max_degree() << '\n';
  return 0;
}

int run_verify(const std::string& input, std::uint64_t limit) {
  const sct::Graph g = load(input);
  const auto census = sct::oracle::enumerate_all_cliques(g, limit);
  const auto tables = sct::count(g, {{true, true}, std::nullopt, 1, sct::CounterKind::exact});
  const auto verdict = sct::oracle::compare(census, tables);
  std::cout << "cliques," << census.clique_total << "\nverdict," << verdict.describe() << '\n';
  return verdict.pass ? 0 : kExitMismatch;
}

int run_inspect(const std::string& input, const std::string& format, std::size_t cap, const std::string& output) {
  const sct::Graph g = load(input);
  const auto o = sct::degeneracy_orient(g);
  const auto tree = sct::materialize_sct(g, o, cap);
  Sink out(output);
  if (format == "nodes") sct::write_tree_nodes(out.stream(), tree);
  else sct::write_tree_text(out.stream(), tree, g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact k-clique counting through the succinct clique tree"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count k-cliques for all k");
  count->add_option("input", count_args.input, "Edge-list file, or - for standard input")->required();
  count->add_flag("--per-vertex", count_args.per_vertex, "Also compute per-vertex counts");
  count->add_flag("--per-edge", count_args.per_edge, "Also compute per-edge counts");
  count->add_option("--max-k", count_args.max_k, "Only count cliques of size <= K")->check(CLI::PositiveNumber);
  count->add_option("--threads", count_args.threads, "Worker threads (global counts only)")
      ->check(CLI::PositiveNumber);
  count->add_option("--format", count_args.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  count->add_option("--output", count_args.output, "Write counts to PATH instead of stdout");
  count->add_option("--report", count_args.report, "Write the JSON run report to PATH instead of stderr");
  auto* verify_flag = count->add_flag("--verify", count_args.verify, "Cross-check against brute-force listing");
  count->add_flag("--oracle", count_args.verify, "Alias of --verify")->excludes(verify_flag);
  count->add_flag("--sct-stats", count_args.sct_stats, "Print m and clique-tree size to stderr");
  auto* exact = count->add_flag("--exact", count_args.exact, "Arbitrary-precision counters (default)");
  count->add_flag("--fast-counters", count_args.fast, "Checked 128-bit counters")->excludes(exact);

  std::string stats_input, stats_report;
  auto* stats = app.add_subcommand("stats", "Degeneracy and core statistics");
  stats->add_option("input", stats_input)->required();
  stats->add_option("--report", stats_report, "Write to PATH instead of stdout");

  std::string verify_input;
  std::uint64_t verify_limit = sct::oracle::kDefaultCliqueCap;
  auto* verify = app.add_subcommand("verify", "Compare all tables against brute-force listing (small graphs)");
  verify->add_option("input", verify_input)->required();
  verify->add_option("--limit", verify_limit, "Maximum number of cliques to list");

  std::string inspect_input, inspect_format = "text", inspect_output;
  std::size_t inspect_cap = sct::kDefaultTreeNodeCap;
  auto* inspect = app.add_subcommand("inspect-sct", "Dump the materialized clique tree (small graphs)");
  inspect->add_option("input", inspect_input)->required();
  inspect->add_option("--format", inspect_format)->check(CLI::IsMember({"text", "nodes"}));
  inspect->add_option("--cap", inspect_cap, "Refuse trees with more nodes than this");
  inspect->add_option("--output", inspect_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count) return run_count(count_args);
    if (*stats) return run_stats(stats_input, stats_report);
    if (*verify) return run_verify(verify_input, verify_limit);
    if (*inspect) return run_inspect(inspect_input, inspect_format, inspect_cap, inspect_output);
  } catch (const sct::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const sct::CounterOverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const sct::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
