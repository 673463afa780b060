#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "motifclose/graph.hpp"
#include "motifclose/motif.hpp"

namespace motifclose {

// Exact closure counting for a non-adjacent pair (i, j). The candidate edge
// is never inserted; every adjacency test treats (i, j) as present.
//
// Nodes adjacent to i or j split into T (both), S_i (only i) and S_j (only
// j). A 4-node set {i, j, a, b} is then classified by the roles of a and b
// plus whether (a, b) is an edge, and sets with b outside the neighborhood
// hang off a single neighbor a. One pass over the adjacency of every node
// in T, S_i and S_j tallies the edges between roles, so the cost is
// O(sum of deg(w) for w in N(i) and N(j)).
//
// A counter owns an O(num_nodes) scratch array and is not thread-safe; give
// each worker its own instance. The graph must outlive the counter.
class ClosureCounter {
 public:
  explicit ClosureCounter(const Graph& g);

  // Throws DataError if the pair is an existing edge or out of range.
  ClosureVector count(const NodePair& p);

  const Graph& graph() const { return *graph_; }

 private:
  const Graph* graph_;
  std::vector<std::uint8_t> role_;  // 0 outside, 1 S_i, 2 S_j, 3 T
};

// One-shot convenience; allocates a counter per call.
ClosureVector closure_counts(const Graph& g, const NodePair& p);

// Degree-only bound, O(1): closure_counts(g, p)[kind] <= upper_bound(g, p, kind).
std::uint64_t upper_bound(const Graph& g, const NodePair& p, MotifKind kind);

struct ScoredCandidate {
  NodePair pair;
  std::uint64_t score = 0;

  friend bool operator==(const ScoredCandidate&, const ScoredCandidate&) = default;
};

struct RankOptions {
  bool prune = true;
  // Worker cap for the exhaustive path.
  unsigned threads = 1;
};

struct RankStats {
  std::size_t candidates = 0;
  std::size_t exact_counts = 0;
  std::size_t pruned = 0;
};

// Exact top-k by closure count: descending score, ties by canonical pair
// order. Duplicate candidates are collapsed; k larger than the candidate
// set returns everything ranked.
//
// With pruning, candidates are visited by decreasing upper bound. Let delta
// be the current k-th best exact score: a candidate is counted only if its
// bound beats delta, or equals it while the pair precedes the k-th
// incumbent in canonical order, so the result matches the exhaustive
// ranking exactly. Once bounds drop below delta the scan stops.
std::vector<ScoredCandidate> rank_pairs(const Graph& g, std::span<const NodePair> candidates,
                                        MotifKind kind, std::size_t k,
                                        const RankOptions& options = {},
                                        RankStats* stats = nullptr);

// Descending score, then canonical pair order.
inline bool ranks_before(const ScoredCandidate& a, const ScoredCandidate& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.pair < b.pair;
}

// Every v with (u, v) not an edge and v != u, as canonical pairs.
std::vector<NodePair> non_edges_of(const Graph& g, NodeId u);

}  // namespace motifclose
