#include "motifclose/oracle.hpp"

#include <algorithm>
#include <deque>

#include <fmt/format.h>

#include "motifclose/errors.hpp"

namespace motifclose::oracle {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairIndex = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

bool adjacent_in_g_prime(const Graph& g, const NodePair& p, NodeId u, NodeId v) {
  if (NodePair(u, v) == p) return true;
  return g.has_edge(u, v);
}

// Nodes at distance 1 or 2 from {i, j} in G + (i, j), excluding i and j.
std::vector<NodeId> distance2_ball(const Graph& g, const NodePair& p) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::deque<NodeId> queue{p.i, p.j};
  dist[p.i] = 0;
  dist[p.j] = 0;
  std::vector<NodeId> ball;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    if (dist[u] == 2) continue;
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] != -1) continue;
      dist[v] = dist[u] + 1;
      ball.push_back(v);
      queue.push_back(v);
    }
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

std::vector<NodeId> candidate_nodes(const Graph& g, const NodePair& p, const OracleOptions& o) {
  if (g.num_nodes() > o.node_budget) {
    throw UsageError(fmt::format(
        "graph has {} nodes, above the oracle budget of {}; use closure_counts instead",
        g.num_nodes(), o.node_budget));
  }
  if (o.scope == Scope::kBall) return distance2_ball(g, p);
  std::vector<NodeId> all;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    if (u != p.i && u != p.j) all.push_back(u);
  }
  return all;
}

template <typename Visit>
void for_each_instance(const Graph& g, const NodePair& p, const std::vector<NodeId>& pool,
                       Visit&& visit) {
  for (std::size_t x = 0; x < pool.size(); ++x) {
    std::vector<NodeId> triple = {p.i, p.j, pool[x]};
    if (auto kind = classify_nodes(g, p, triple)) visit(triple, *kind);
    for (std::size_t y = x + 1; y < pool.size(); ++y) {
      std::vector<NodeId> quad = {p.i, p.j, pool[x], pool[y]};
      if (auto kind = classify_nodes(g, p, quad)) visit(quad, *kind);
    }
  }
}

ClosureVector count_with(const Graph& g, const NodePair& p, const OracleOptions& options) {
  ClosureVector counts;
  for_each_instance(g, p, candidate_nodes(g, p, options),
                    [&](const std::vector<NodeId>&, MotifKind kind) { ++counts[kind]; });
  return counts;
}

}  // namespace

std::optional<MotifKind> classify_4set(const Adjacency4& adj) {
  std::array<int, 4> degree{};
  int edges = 0;
  for (std::size_t e = 0; e < adj.size(); ++e) {
    if (!adj[e]) continue;
    ++edges;
    ++degree[kPairIndex[e].first];
    ++degree[kPairIndex[e].second];
  }
  std::sort(degree.begin(), degree.end());
  switch (edges) {
    case 3:
      if (degree == std::array{1, 1, 2, 2}) return MotifKind::kPath4;
      if (degree == std::array{1, 1, 1, 3}) return MotifKind::kStar4;
      return std::nullopt;  // triangle plus isolated node
    case 4:
      if (degree == std::array{2, 2, 2, 2}) return MotifKind::kCycle4;
      if (degree == std::array{1, 2, 2, 3}) return MotifKind::kTailedTriangle4;
      return std::nullopt;
    case 5:
      return MotifKind::kChordalCycle4;
    case 6:
      return MotifKind::kClique4;
    default:
      return std::nullopt;
  }
}

std::optional<MotifKind> classify_nodes(const Graph& g, const NodePair& p,
                                        const std::vector<NodeId>& nodes) {
  if (nodes.size() == 3) {
    bool all = adjacent_in_g_prime(g, p, nodes[0], nodes[1]) &&
               adjacent_in_g_prime(g, p, nodes[0], nodes[2]) &&
               adjacent_in_g_prime(g, p, nodes[1], nodes[2]);
    return all ? std::optional(MotifKind::kTriangle) : std::nullopt;
  }
  if (nodes.size() != 4) return std::nullopt;
  Adjacency4 adj{};
  for (std::size_t e = 0; e < adj.size(); ++e) {
    auto [a, b] = kPairIndex[e];
    adj[e] = adjacent_in_g_prime(g, p, nodes[a], nodes[b]);
  }
  return classify_4set(adj);
}

ClosureVector oracle_closure_counts(const Graph& g, const NodePair& p,
                                    const OracleOptions& options) {
  if (g.has_edge(p.i, p.j)) throw DataError("pair is an existing edge");
  return count_with(g, p, options);
}

ClosureVector oracle_counts_materialized(const Graph& g_with_edge, const NodePair& p,
                                         const OracleOptions& options) {
  if (!g_with_edge.has_edge(p.i, p.j)) throw DataError("pair must be an edge of this graph");
  return count_with(g_with_edge, p, options);
}

std::vector<InducedInstance> enumerate_instances(const Graph& g, const NodePair& p,
                                                 const OracleOptions& options) {
  if (g.has_edge(p.i, p.j)) throw DataError("pair is an existing edge");
  std::vector<InducedInstance> out;
  for_each_instance(g, p, candidate_nodes(g, p, options),
                    [&](const std::vector<NodeId>& nodes, MotifKind kind) {
                      InducedInstance inst{nodes, kind};
                      std::sort(inst.nodes.begin(), inst.nodes.end());
                      out.push_back(std::move(inst));
                    });
  return out;
}

}  // namespace motifclose::oracle
