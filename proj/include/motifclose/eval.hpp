#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "motifclose/baselines.hpp"
#include "motifclose/graph.hpp"
#include "motifclose/metrics.hpp"
#include "motifclose/motif.hpp"
#include "motifclose/rng.hpp"

namespace motifclose {

// How MAP is averaged within a trial.
enum class MapMode {
  kTrial,  // one AP over the whole candidate set per trial
  kQuery,  // AP per endpoint node that has a positive candidate, averaged
};

struct EvalConfig {
  double holdout_fraction = 0.10;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::size_t noise_edges = 0;
  // Overrides noise_edges with half the training graph's edge count.
  bool noise_half = false;
  std::size_t k_max = 40;
  unsigned threads = 1;
  MapMode map_mode = MapMode::kTrial;

  // Throws UsageError for values outside their domains.
  void validate() const;
};

// Test hook: arbitrary scoring function. Receives the label so that
// oracle methods can be expressed.
using CustomScorer = std::function<double(const Graph& training, const NodePair&, bool label)>;

struct Method {
  std::string name;
  std::variant<MotifKind, BaselineKind, CustomScorer> scorer;

  static Method motif(MotifKind kind);
  static Method baseline(BaselineKind kind);
};

// "all" (six 4-node motifs + CN, Jaccard, Adamic/Adar) or a comma list of
// cn | jaccard | adamic-adar | motif:<kind>. Throws UsageError.
std::vector<Method> parse_methods(const std::string& spec);

struct HoldoutSplit {
  Graph training;
  std::vector<NodePair> positives;
};

// floor(fraction * |E|) edges removed uniformly without replacement.
// Throws DataError unless at least one edge is held out and one remains.
HoldoutSplit split_holdout(const Graph& g, double holdout_fraction, Rng& rng);
HoldoutSplit split_holdout(const Graph& g, const EvalConfig& cfg, std::size_t trial);

// `count` distinct non-edges of `g`, none in `exclude`, drawn uniformly.
// Throws DataError when fewer than `count` such pairs exist.
std::vector<NodePair> sample_negatives(const Graph& g, std::size_t count,
                                       std::span<const NodePair> exclude, Rng& rng);

// g plus cfg's number of uniformly drawn non-edges, never touching
// `exclude` (the held-out positives and the sampled negatives).
Graph inject_noise(const Graph& g, const EvalConfig& cfg, std::span<const NodePair> exclude,
                   Rng& rng);

struct TrialMetrics {
  double average_precision = 0.0;
  double coverage = 0.0;
  std::vector<double> precision;  // P@1..P@k_max
};

struct MethodSummary {
  std::string name;
  double map = 0.0;
  double mean_coverage = 0.0;
  std::vector<double> mean_precision;
  std::vector<TrialMetrics> trials;
};

struct EvalReport {
  std::string dataset;
  std::size_t trials = 0;
  std::size_t k_max = 0;
  std::vector<MethodSummary> methods;
  // Wall time for all seven closure counts of one pair. Excluded from the
  // deterministic CSV outputs.
  double mean_pair_ms = 0.0;
  std::size_t timed_pairs = 0;
};

EvalReport run_eval(const Graph& g, const EvalConfig& cfg, std::span<const Method> methods,
                    const std::string& dataset = "graph");

// Scores one trial's candidate list with one method on `training`.
std::vector<ScoredPair> score_candidates(const Graph& training,
                                         std::span<const NodePair> positives,
                                         std::span<const NodePair> negatives,
                                         const Method& method, unsigned threads = 1);

struct BenchResult {
  std::size_t pairs = 0;
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double p99_ms = 0.0;
  std::vector<double> per_pair_ms;
};

// Times closure counting (all kinds in one pass) for each pair.
BenchResult bench_closure(const Graph& g, std::span<const NodePair> pairs);

}  // namespace motifclose
