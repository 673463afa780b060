#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "motifclose/baselines.hpp"
#include "motifclose/closure.hpp"
#include "motifclose/errors.hpp"
#include "motifclose/eval.hpp"
#include "motifclose/oracle.hpp"
#include "motifclose/report.hpp"

namespace motifclose::cli {

namespace {

Graph load(const std::string& path, const std::string& format, std::ostream& err) {
  LoadStats stats;
  Graph g = load_graph_file(path, parse_edge_format(format), &stats);
  if (stats.self_loops_dropped + stats.duplicates_dropped > 0) {
    err << fmt::format("warning: {}: dropped {} self-loops and {} duplicate edges\n", path,
                       stats.self_loops_dropped, stats.duplicates_dropped);
  }
  return g;
}

NodeId to_dense(const Graph& g, std::uint64_t label) {
  if (label < g.index_base()) {
    throw DataError(fmt::format("node {} below the file's first id {}", label, g.index_base()));
  }
  const std::uint64_t dense = label - g.index_base();
  if (dense >= g.num_nodes()) {
    throw DataError(fmt::format("node {} out of range", label));
  }
  return static_cast<NodeId>(dense);
}

MotifKind motif_option(const std::string& name) {
  auto kind = parse_motif_kind(name);
  if (!kind) throw UsageError(fmt::format("unknown motif '{}'", name));
  return *kind;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError(fmt::format("cannot write '{}'", path.string()));
  return out;
}

struct ScoreArgs {
  std::string graph;
  std::uint64_t i = 0;
  std::uint64_t j = 0;
};

void cmd_score(const ScoreArgs& a, const std::string& format, std::ostream& out,
               std::ostream& err) {
  const Graph g = load(a.graph, format, err);
  const NodePair p(to_dense(g, a.i), to_dense(g, a.j));
  const ClosureVector v = closure_counts(g, p);
  for (MotifKind kind : kAllMotifKinds) out << motif_key(kind) << '=' << v[kind] << '\n';
  for (auto kind : {BaselineKind::kCommonNeighbors, BaselineKind::kJaccard,
                    BaselineKind::kAdamicAdar}) {
    out << baseline_key(kind) << '=' << fmt::format("{:.6f}", baseline_score(g, p, kind)) << '\n';
  }
}

struct RankArgs {
  std::string graph;
  std::string candidates;
  std::optional<std::uint64_t> all_non_edges_of;
  std::string motif = "4-cycle";
  std::size_t k = 10;
  bool no_prune = false;
  unsigned threads = 1;
  std::string out_path;
};

void cmd_rank(const RankArgs& a, const std::string& format, std::ostream& out,
              std::ostream& err) {
  const Graph g = load(a.graph, format, err);
  std::vector<NodePair> candidates;
  if (a.all_non_edges_of) {
    candidates = non_edges_of(g, to_dense(g, *a.all_non_edges_of));
  } else {
    std::ifstream in(a.candidates);
    if (!in) throw DataError(fmt::format("cannot open candidates file '{}'", a.candidates));
    candidates = load_pairs(in, g);
  }
  RankOptions options;
  options.prune = !a.no_prune;
  options.threads = a.threads;
  RankStats stats;
  const auto ranked = rank_pairs(g, candidates, motif_option(a.motif), a.k, options, &stats);
  if (a.out_path.empty()) {
    write_rank_csv(out, g, ranked);
  } else {
    auto file = open_output(a.out_path);
    write_rank_csv(file, g, ranked);
  }
  err << fmt::format("candidates={} exact_counts={} pruned={}\n", stats.candidates,
                     stats.exact_counts, stats.pruned);
}

struct EvalArgs {
  std::vector<std::string> graphs;
  std::string methods = "all";
  double holdout = 0.10;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::string noise = "0";
  std::size_t k_max = 40;
  unsigned threads = 1;
  std::string map_mode = "trial";
  std::string out_dir;
};

void cmd_eval(const EvalArgs& a, const std::string& format, std::ostream& out,
              std::ostream& err) {
  EvalConfig cfg;
  cfg.holdout_fraction = a.holdout;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.k_max = a.k_max;
  cfg.threads = a.threads;
  if (a.noise == "half") {
    cfg.noise_half = true;
  } else {
    try {
      std::size_t used = 0;
      cfg.noise_edges = std::stoull(a.noise, &used);
      if (used != a.noise.size()) throw std::invalid_argument(a.noise);
    } catch (const std::logic_error&) {
      throw UsageError(fmt::format("--noise-edges expects a count or 'half', got '{}'", a.noise));
    }
  }
  if (a.map_mode == "trial") {
    cfg.map_mode = MapMode::kTrial;
  } else if (a.map_mode == "query") {
    cfg.map_mode = MapMode::kQuery;
  } else {
    throw UsageError(fmt::format("unknown map mode '{}'", a.map_mode));
  }
  cfg.validate();
  const auto methods = parse_methods(a.methods);

  std::vector<EvalReport> reports;
  for (const auto& path : a.graphs) {
    const Graph g = load(path, format, err);
    reports.push_back(run_eval(g, cfg, methods, std::filesystem::path(path).stem().string()));
  }

  if (a.out_dir.empty()) {
    write_map_table(out, reports);
    return;
  }
  std::filesystem::create_directories(a.out_dir);
  const std::filesystem::path dir(a.out_dir);
  auto trials = open_output(dir / "trials.csv");
  write_trials_csv(trials, reports);
  auto map = open_output(dir / "map.csv");
  write_map_table(map, reports);
  auto cov = open_output(dir / "coverage.csv");
  write_coverage_table(cov, reports);
  auto prec = open_output(dir / "precision_at_k.csv");
  write_precision_csv(prec, reports);
  auto timing = open_output(dir / "timing.csv");
  write_timing_csv(timing, reports);
  write_map_table(out, reports);
}

struct BenchArgs {
  std::string graph;
  std::size_t pairs = 1000;
  std::uint64_t seed = 0;
  std::string per_pair_path;
};

void cmd_bench(const BenchArgs& a, const std::string& format, std::ostream& out,
               std::ostream& err) {
  if (a.pairs == 0) throw UsageError("--pairs must be at least 1");
  const Graph g = load(a.graph, format, err);
  Rng rng(a.seed, 0);
  const auto pairs = sample_negatives(g, a.pairs, {}, rng);
  const BenchResult bench = bench_closure(g, pairs);
  write_bench_csv(out, bench);
  if (!a.per_pair_path.empty()) {
    auto file = open_output(a.per_pair_path);
    file << "i,j,ms\n";
    for (std::size_t x = 0; x < pairs.size(); ++x) {
      file << fmt::format("{},{},{:.6f}\n", pairs[x].i + g.index_base(),
                          pairs[x].j + g.index_base(), bench.per_pair_ms[x]);
    }
  }
}

struct OracleArgs {
  std::string graph;
  std::vector<std::uint64_t> pair;
  std::size_t pairs = 100;
  std::uint64_t seed = 0;
  std::size_t budget = 2000;
};

// Returns the number of disagreeing pairs.
std::size_t cmd_oracle_check(const OracleArgs& a, const std::string& format, std::ostream& out,
                             std::ostream& err) {
  const Graph g = load(a.graph, format, err);
  std::vector<NodePair> pairs;
  if (!a.pair.empty()) {
    pairs.emplace_back(to_dense(g, a.pair[0]), to_dense(g, a.pair[1]));
  } else {
    Rng rng(a.seed, 0);
    pairs = sample_negatives(g, a.pairs, {}, rng);
  }
  oracle::OracleOptions options;
  options.node_budget = a.budget;
  std::size_t mismatches = 0;
  ClosureCounter counter(g);
  for (const auto& p : pairs) {
    const ClosureVector fast = counter.count(p);
    const ClosureVector slow = oracle::oracle_closure_counts(g, p, options);
    if (fast != slow) {
      ++mismatches;
      out << fmt::format("MISMATCH {} {}\n  engine: {}\n  oracle: {}\n", p.i + g.index_base(),
                         p.j + g.index_base(), to_string(fast), to_string(slow));
    }
  }
  out << fmt::format("checked={} mismatches={}\n", pairs.size(), mismatches);
  return mismatches;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Higher-order motif closure counting, ranking and evaluation", "motifclose"};
  app.require_subcommand(1);
  std::string format = "auto";
  app.add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"edges", "mtx", "auto"}));

  ScoreArgs score_args;
  auto* score = app.add_subcommand("score", "Closure counts and baselines for one node pair");
  score->add_option("graph", score_args.graph, "Edge list file")->required();
  score->add_option("i", score_args.i, "First node (file numbering)")->required();
  score->add_option("j", score_args.j, "Second node (file numbering)")->required();

  RankArgs rank_args;
  auto* rank = app.add_subcommand("rank", "Exact top-k candidate pairs by motif closure");
  rank->add_option("graph", rank_args.graph, "Edge list file")->required();
  auto* cand = rank->add_option("--candidates", rank_args.candidates, "File of candidate pairs");
  auto* all = rank->add_option("--all-non-edges-of", rank_args.all_non_edges_of,
                               "Rank every non-neighbor of this node");
  cand->excludes(all);
  rank->add_option("--motif", rank_args.motif, "Motif kind")->required();
  rank->add_option("--k", rank_args.k, "Number of results")->check(CLI::PositiveNumber);
  rank->add_flag("--no-prune", rank_args.no_prune, "Disable upper-bound pruning");
  rank->add_option("--threads", rank_args.threads, "Worker cap")->check(CLI::PositiveNumber);
  rank->add_option("--out", rank_args.out_path, "Write CSV here instead of stdout");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Hold-out link prediction evaluation");
  eval->add_option("graphs", eval_args.graphs, "Edge list files, one per dataset")->required();
  eval->add_option("--methods,--method", eval_args.methods,
                   "all, or a comma list of cn, jaccard, adamic-adar, motif:<kind>");
  eval->add_option("--holdout", eval_args.holdout, "Fraction of edges held out");
  eval->add_option("--trials", eval_args.trials, "Independent hold-out trials");
  eval->add_option("--seed", eval_args.seed, "Base seed");
  eval->add_option("--noise-edges", eval_args.noise, "Random edges added, or 'half' for |E|/2");
  eval->add_option("--kmax", eval_args.k_max, "Largest k for precision@k");
  eval->add_option("--threads", eval_args.threads, "Worker cap")->check(CLI::PositiveNumber);
  eval->add_option("--map-mode", eval_args.map_mode, "trial or query");
  eval->add_option("--out-dir", eval_args.out_dir, "Directory for CSV outputs");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time closure counting on random non-edges");
  bench->add_option("graph", bench_args.graph, "Edge list file")->required();
  bench->add_option("--pairs", bench_args.pairs, "Number of sampled pairs");
  bench->add_option("--seed", bench_args.seed, "Sampling seed");
  bench->add_option("--per-pair", bench_args.per_pair_path, "Also write per-pair timings here");

  OracleArgs oracle_args;
  auto* check = app.add_subcommand("oracle-check", "Compare the engine against brute force");
  check->add_option("graph", oracle_args.graph, "Edge list file")->required();
  check->add_option("--pair", oracle_args.pair, "Check this pair only")->expected(2);
  check->add_option("--pairs", oracle_args.pairs, "Number of sampled non-edges");
  check->add_option("--seed", oracle_args.seed, "Sampling seed");
  check->add_option("--budget", oracle_args.budget, "Oracle node budget");

  std::vector<std::string> argv_storage = {"motifclose"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (score->parsed()) {
      cmd_score(score_args, format, out, err);
    } else if (rank->parsed()) {
      if (rank_args.candidates.empty() && !rank_args.all_non_edges_of) {
        throw UsageError("rank needs --candidates or --all-non-edges-of");
      }
      cmd_rank(rank_args, format, out, err);
    } else if (eval->parsed()) {
      cmd_eval(eval_args, format, out, err);
    } else if (bench->parsed()) {
      cmd_bench(bench_args, format, out, err);
    } else if (check->parsed()) {
      if (cmd_oracle_check(oracle_args, format, out, err) > 0) return kExitData;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace motifclose::cli
