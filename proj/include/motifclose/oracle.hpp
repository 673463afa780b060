#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "motifclose/graph.hpp"
#include "motifclose/motif.hpp"

// Brute-force reference for closure counting. Slow on purpose: every
// candidate node set is materialized and classified from its adjacency.

namespace motifclose::oracle {

// Adjacency of an ordered 4-tuple (v0, v1, v2, v3), in pair order
// 01, 02, 03, 12, 13, 23.
using Adjacency4 = std::array<bool, 6>;

// Isomorphism class of a 4-node graph, or nullopt when it is disconnected.
std::optional<MotifKind> classify_4set(const Adjacency4& adj);

enum class Scope {
  kBall,      // third and fourth nodes drawn from the distance-2 ball around {i, j}
  kAllNodes,  // every node pair outside {i, j}
};

struct OracleOptions {
  std::size_t node_budget = 2000;
  Scope scope = Scope::kBall;
};

// Counts induced instances in G + (i, j) containing the pair as an edge.
// Throws DataError if the pair is an edge, UsageError over the node budget.
ClosureVector oracle_closure_counts(const Graph& g, const NodePair& p,
                                    const OracleOptions& options = {});

// Same count on a graph where (i, j) is already materialized as an edge.
ClosureVector oracle_counts_materialized(const Graph& g_with_edge, const NodePair& p,
                                         const OracleOptions& options = {});

struct InducedInstance {
  std::vector<NodeId> nodes;  // sorted, 3 or 4 entries
  MotifKind kind;
};

std::vector<InducedInstance> enumerate_instances(const Graph& g, const NodePair& p,
                                                 const OracleOptions& options = {});

// Kind of the subgraph induced on `nodes` in G + (i, j); nullopt when
// disconnected or not a 3/4-node closure shape.
std::optional<MotifKind> classify_nodes(const Graph& g, const NodePair& p,
                                        const std::vector<NodeId>& nodes);

}  // namespace motifclose::oracle
