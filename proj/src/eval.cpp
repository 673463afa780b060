#include "motifclose/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

#include "motifclose/closure.hpp"
#include "motifclose/errors.hpp"
#include "motifclose/parallel.hpp"

namespace motifclose {

void EvalConfig::validate() const {
  if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0)) {
    throw UsageError(fmt::format("holdout fraction {} not in (0, 1)", holdout_fraction));
  }
  if (trials == 0) throw UsageError("trials must be positive");
  if (k_max == 0) throw UsageError("kmax must be positive");
  if (threads == 0) throw UsageError("threads must be positive");
}

Method Method::motif(MotifKind kind) {
  return {std::string(motif_flag_name(kind)), kind};
}

Method Method::baseline(BaselineKind kind) {
  return {std::string(baseline_flag_name(kind)), kind};
}

std::vector<Method> parse_methods(const std::string& spec) {
  std::vector<Method> methods;
  if (spec == "all") {
    for (MotifKind kind : kFourNodeMotifKinds) methods.push_back(Method::motif(kind));
    for (auto kind : {BaselineKind::kCommonNeighbors, BaselineKind::kJaccard,
                      BaselineKind::kAdamicAdar}) {
      methods.push_back(Method::baseline(kind));
    }
    return methods;
  }
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item.starts_with("motif:")) {
      auto kind = parse_motif_kind(std::string_view(item).substr(6));
      if (!kind) throw UsageError(fmt::format("unknown motif in method '{}'", item));
      methods.push_back(Method::motif(*kind));
    } else if (auto kind = parse_baseline_kind(item)) {
      methods.push_back(Method::baseline(*kind));
    } else {
      throw UsageError(fmt::format("unknown method '{}'", item));
    }
  }
  if (methods.empty()) throw UsageError("no methods given");
  return methods;
}

HoldoutSplit split_holdout(const Graph& g, double holdout_fraction, Rng& rng) {
  const std::size_t m = g.num_edges();
  const auto count = static_cast<std::size_t>(
      std::floor(holdout_fraction * static_cast<double>(m) + 1e-9));
  if (count < 1 || count >= m) {
    throw DataError(fmt::format(
        "holdout fraction {} of {} edges leaves no positives or no training edges",
        holdout_fraction, m));
  }
  std::vector<NodePair> edges = g.edges();
  // Partial Fisher-Yates: the first `count` slots become the sample.
  for (std::size_t x = 0; x < count; ++x) {
    std::swap(edges[x], edges[x + rng.below(m - x)]);
  }
  std::vector<NodePair> positives(edges.begin(), edges.begin() + count);
  return {g.without_edges(positives), std::move(positives)};
}

HoldoutSplit split_holdout(const Graph& g, const EvalConfig& cfg, std::size_t trial) {
  Rng rng(cfg.seed, trial);
  return split_holdout(g, cfg.holdout_fraction, rng);
}

namespace {

std::uint64_t pair_key(const NodePair& p) { return (std::uint64_t{p.i} << 32) | p.j; }

// Above this many unordered pairs the dense enumeration path is skipped.
constexpr std::uint64_t kDensePairLimit = 4'000'000;

}  // namespace

std::vector<NodePair> sample_negatives(const Graph& g, std::size_t count,
                                       std::span<const NodePair> exclude, Rng& rng) {
  const std::uint64_t n = g.num_nodes();
  const std::uint64_t all_pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::unordered_set<std::uint64_t> excluded;
  for (const auto& p : exclude) {
    if (p.j < n && !g.has_edge(p.i, p.j)) excluded.insert(pair_key(p));
  }
  const std::uint64_t available = all_pairs - g.num_edges() - excluded.size();
  if (count > available) {
    throw DataError(fmt::format("cannot sample {} non-edges: only {} available", count, available));
  }
  std::vector<NodePair> out;
  out.reserve(count);
  if (count == 0) return out;

  if (all_pairs <= kDensePairLimit && 2 * count >= available) {
    std::vector<NodePair> pool;
    pool.reserve(available);
    for (NodeId u = 0; u < n; ++u) {
      for (const auto& p : non_edges_of(g, u)) {
        if (p.i == u && !excluded.contains(pair_key(p))) pool.push_back(p);
      }
    }
    for (std::size_t x = 0; x < count; ++x) {
      std::swap(pool[x], pool[x + rng.below(pool.size() - x)]);
    }
    out.assign(pool.begin(), pool.begin() + count);
    return out;
  }

  std::unordered_set<std::uint64_t> chosen;
  while (out.size() < count) {
    const auto u = static_cast<NodeId>(rng.below(n));
    const auto v = static_cast<NodeId>(rng.below(n));
    if (u == v) continue;
    NodePair p(u, v);
    const std::uint64_t key = pair_key(p);
    if (excluded.contains(key) || chosen.contains(key) || g.has_edge(u, v)) continue;
    chosen.insert(key);
    out.push_back(p);
  }
  return out;
}

Graph inject_noise(const Graph& g, const EvalConfig& cfg, std::span<const NodePair> exclude,
                   Rng& rng) {
  const std::size_t count = cfg.noise_half ? g.num_edges() / 2 : cfg.noise_edges;
  if (count == 0) return g;
  auto noise = sample_negatives(g, count, exclude, rng);
  return g.with_edges(noise);
}

namespace {

struct CandidateSet {
  std::vector<NodePair> pairs;
  std::vector<bool> labels;
};

CandidateSet make_candidates(std::span<const NodePair> positives,
                             std::span<const NodePair> negatives) {
  CandidateSet c;
  c.pairs.assign(positives.begin(), positives.end());
  c.pairs.insert(c.pairs.end(), negatives.begin(), negatives.end());
  c.labels.assign(positives.size(), true);
  c.labels.resize(c.pairs.size(), false);
  return c;
}

double method_score(const Graph& training, const Method& method, const NodePair& p, bool label,
                    const ClosureVector* closures) {
  if (const auto* kind = std::get_if<MotifKind>(&method.scorer)) {
    return static_cast<double>(closures != nullptr ? (*closures)[*kind]
                                                   : closure_counts(training, p)[*kind]);
  }
  if (const auto* kind = std::get_if<BaselineKind>(&method.scorer)) {
    return baseline_score(training, p, *kind);
  }
  return std::get<CustomScorer>(method.scorer)(training, p, label);
}

double query_map(std::span<const ScoredPair> scored) {
  std::map<NodeId, std::vector<ScoredPair>> by_node;
  for (const auto& s : scored) {
    by_node[s.pair.i].push_back(s);
    by_node[s.pair.j].push_back(s);
  }
  double sum = 0.0;
  std::size_t queries = 0;
  for (const auto& [node, list] : by_node) {
    if (std::none_of(list.begin(), list.end(), [](const auto& s) { return s.label; })) continue;
    sum += average_precision(list);
    ++queries;
  }
  return sum / static_cast<double>(queries);
}

}  // namespace

std::vector<ScoredPair> score_candidates(const Graph& training,
                                         std::span<const NodePair> positives,
                                         std::span<const NodePair> negatives,
                                         const Method& method, unsigned threads) {
  const CandidateSet c = make_candidates(positives, negatives);
  std::vector<ScoredPair> out(c.pairs.size());
  parallel_for(c.pairs.size(), threads, [&](unsigned, std::size_t begin, std::size_t end) {
    ClosureCounter counter(training);
    for (std::size_t x = begin; x < end; ++x) {
      ClosureVector v;
      const bool motif = std::holds_alternative<MotifKind>(method.scorer);
      if (motif) v = counter.count(c.pairs[x]);
      out[x] = {c.pairs[x], method_score(training, method, c.pairs[x], c.labels[x],
                                         motif ? &v : nullptr),
                c.labels[x]};
    }
  });
  return out;
}

EvalReport run_eval(const Graph& g, const EvalConfig& cfg, std::span<const Method> methods,
                    const std::string& dataset) {
  cfg.validate();
  if (methods.empty()) throw UsageError("no methods given");
  EvalReport report;
  report.dataset = dataset;
  report.trials = cfg.trials;
  report.k_max = cfg.k_max;
  report.methods.resize(methods.size());
  for (std::size_t m = 0; m < methods.size(); ++m) report.methods[m].name = methods[m].name;

  double total_ms = 0.0;
  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(cfg.seed, trial);
    HoldoutSplit split = split_holdout(g, cfg.holdout_fraction, rng);
    auto negatives = sample_negatives(g, split.positives.size(), split.positives, rng);
    std::vector<NodePair> labelled = split.positives;
    labelled.insert(labelled.end(), negatives.begin(), negatives.end());
    const Graph training = inject_noise(split.training, cfg, labelled, rng);
    const CandidateSet c = make_candidates(split.positives, negatives);

    std::vector<ClosureVector> closures(c.pairs.size());
    std::vector<double> elapsed_ms(c.pairs.size());
    parallel_for(c.pairs.size(), cfg.threads, [&](unsigned, std::size_t begin, std::size_t end) {
      ClosureCounter counter(training);
      for (std::size_t x = begin; x < end; ++x) {
        const auto start = std::chrono::steady_clock::now();
        closures[x] = counter.count(c.pairs[x]);
        elapsed_ms[x] = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
      }
    });
    for (double ms : elapsed_ms) total_ms += ms;
    report.timed_pairs += c.pairs.size();

    for (std::size_t m = 0; m < methods.size(); ++m) {
      std::vector<ScoredPair> scored(c.pairs.size());
      parallel_for(c.pairs.size(), cfg.threads, [&](unsigned, std::size_t begin, std::size_t end) {
        for (std::size_t x = begin; x < end; ++x) {
          scored[x] = {c.pairs[x],
                       method_score(training, methods[m], c.pairs[x], c.labels[x], &closures[x]),
                       c.labels[x]};
        }
      });
      TrialMetrics tm;
      tm.average_precision =
          cfg.map_mode == MapMode::kQuery ? query_map(scored) : average_precision(scored);
      tm.coverage = coverage(scored);
      tm.precision = precision_curve(scored, cfg.k_max);
      report.methods[m].trials.push_back(std::move(tm));
    }
  }

  const double trials = static_cast<double>(cfg.trials);
  for (auto& summary : report.methods) {
    summary.mean_precision.assign(cfg.k_max, 0.0);
    for (const auto& tm : summary.trials) {
      summary.map += tm.average_precision;
      summary.mean_coverage += tm.coverage;
      for (std::size_t k = 0; k < cfg.k_max; ++k) summary.mean_precision[k] += tm.precision[k];
    }
    summary.map /= trials;
    summary.mean_coverage /= trials;
    for (double& p : summary.mean_precision) p /= trials;
  }
  report.mean_pair_ms =
      report.timed_pairs == 0 ? 0.0 : total_ms / static_cast<double>(report.timed_pairs);
  return report;
}

BenchResult bench_closure(const Graph& g, std::span<const NodePair> pairs) {
  BenchResult result;
  result.pairs = pairs.size();
  if (pairs.empty()) return result;
  ClosureCounter counter(g);
  std::uint64_t sink = 0;
  for (const auto& p : pairs) {
    const auto start = std::chrono::steady_clock::now();
    const ClosureVector v = counter.count(p);
    result.per_pair_ms.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count());
    sink += v[MotifKind::kPath4];
  }
  static_cast<void>(sink);
  std::vector<double> sorted = result.per_pair_ms;
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (double ms : sorted) total += ms;
  result.mean_ms = total / static_cast<double>(sorted.size());
  const std::size_t n = sorted.size();
  result.median_ms = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
  // Nearest-rank percentile.
  const auto rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(n)));
  result.p99_ms = sorted[std::max<std::size_t>(rank, 1) - 1];
  return result;
}

}  // namespace motifclose
