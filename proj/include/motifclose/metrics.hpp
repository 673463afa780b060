#pragma once

#include <span>
#include <vector>

#include "motifclose/graph.hpp"

namespace motifclose {

// A candidate with its score under one method and its ground-truth label
// (held-out positive vs sampled negative).
struct ScoredPair {
  NodePair pair;
  double score = 0.0;
  bool label = false;
};

// All metrics rank by descending score. Candidates with equal scores form a
// tie group and every metric reports its expectation over uniformly random
// orderings inside each group, computed in closed form. The input order is
// irrelevant.

// Mean over positives of precision at the positive's rank.
// Throws DataError when there are no positives.
double average_precision(std::span<const ScoredPair> ranked);

// Fraction of positives among the first k. Throws DataError unless
// 1 <= k <= size.
double precision_at_k(std::span<const ScoredPair> ranked, std::size_t k);

// P@1..P@k_max in one pass. k beyond the list length is clamped to it.
std::vector<double> precision_curve(std::span<const ScoredPair> ranked, std::size_t k_max);

// Expected rank of the last positive divided by the list length. Lower is
// better; a perfect ranking of p positives among n gives p / n.
// Throws DataError when there are no positives.
double coverage(std::span<const ScoredPair> ranked);

}  // namespace motifclose
