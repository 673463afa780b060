#include "motifclose/closure.hpp"

#include <algorithm>
#include <queue>

#include "motifclose/errors.hpp"
#include "motifclose/parallel.hpp"

namespace motifclose {

namespace {

enum Role : std::uint8_t { kOutside = 0, kOnlyI = 1, kOnlyJ = 2, kBoth = 3 };

std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace

ClosureCounter::ClosureCounter(const Graph& g) : graph_(&g), role_(g.num_nodes(), kOutside) {}

ClosureVector ClosureCounter::count(const NodePair& p) {
  const Graph& g = *graph_;
  g.check_node(p.i);
  g.check_node(p.j);
  if (g.has_edge(p.i, p.j)) throw DataError("pair is an existing edge");

  const auto nbr_i = g.neighbors_unchecked(p.i);
  const auto nbr_j = g.neighbors_unchecked(p.j);
  for (NodeId a : nbr_i) role_[a] = kOnlyI;
  for (NodeId b : nbr_j) role_[b] |= kOnlyJ;

  std::uint64_t size[4] = {};
  // half_edges[r][s]: ordered (a, b) adjacent with role(a) = r, role(b) = s,
  // both inside the neighborhood. Each edge shows up once from each side.
  std::uint64_t half_edges[4][4] = {};
  // Neighbors of role-r nodes lying outside N(i), N(j) and {i, j}.
  std::uint64_t outside[4] = {};

  auto scan = [&](NodeId a) {
    const std::uint8_t ra = role_[a];
    ++size[ra];
    for (NodeId b : g.neighbors_unchecked(a)) {
      if (b == p.i || b == p.j) continue;
      const std::uint8_t rb = role_[b];
      if (rb == kOutside) {
        ++outside[ra];
      } else {
        ++half_edges[ra][rb];
      }
    }
  };
  for (NodeId a : nbr_i) scan(a);
  for (NodeId b : nbr_j) {
    if (role_[b] == kOnlyJ) scan(b);
  }

  for (NodeId a : nbr_i) role_[a] = kOutside;
  for (NodeId b : nbr_j) role_[b] = kOutside;

  const std::uint64_t t = size[kBoth];
  const std::uint64_t si = size[kOnlyI];
  const std::uint64_t sj = size[kOnlyJ];
  const std::uint64_t e_tt = half_edges[kBoth][kBoth] / 2;
  const std::uint64_t e_ii = half_edges[kOnlyI][kOnlyI] / 2;
  const std::uint64_t e_jj = half_edges[kOnlyJ][kOnlyJ] / 2;
  const std::uint64_t e_ti = half_edges[kBoth][kOnlyI];
  const std::uint64_t e_tj = half_edges[kBoth][kOnlyJ];
  const std::uint64_t e_ij = half_edges[kOnlyI][kOnlyJ];

  ClosureVector v;
  v[MotifKind::kTriangle] = t;
  // {a, b} both in T: K4 if a~b, otherwise a diamond with (i, j) as chord.
  v[MotifKind::kClique4] = e_tt;
  // Plus a in T, b in S_i/S_j with a~b: diamond with (i, j) on the cycle.
  v[MotifKind::kChordalCycle4] = choose2(t) - e_tt + e_ti + e_tj;
  // a in T with b in S_i/S_j not adjacent to a, or b outside hanging off a:
  // (i, j) is a triangle edge. a~b both in S_i (or S_j): (i, j) is the tail.
  v[MotifKind::kTailedTriangle4] =
      (t * si - e_ti) + (t * sj - e_tj) + e_ii + e_jj + outside[kBoth];
  // Both in S_i (or S_j) and non-adjacent: star centered on i (or j).
  v[MotifKind::kStar4] = (choose2(si) - e_ii) + (choose2(sj) - e_jj);
  // a in S_i, b in S_j: 4-cycle if a~b, otherwise a path with (i, j) in the middle.
  v[MotifKind::kCycle4] = e_ij;
  // b outside hanging off a in S_i or S_j: path with (i, j) at one end.
  v[MotifKind::kPath4] = (si * sj - e_ij) + outside[kOnlyI] + outside[kOnlyJ];
  return v;
}

ClosureVector closure_counts(const Graph& g, const NodePair& p) {
  ClosureCounter counter(g);
  return counter.count(p);
}

std::uint64_t upper_bound(const Graph& g, const NodePair& p, MotifKind kind) {
  const std::uint64_t di = g.degree_unchecked(p.i);
  const std::uint64_t dj = g.degree_unchecked(p.j);
  const std::uint64_t m = std::min(di, dj);
  const std::uint64_t delta = g.max_degree();
  switch (kind) {
    case MotifKind::kTriangle:
      return m;
    case MotifKind::kClique4:
      return choose2(m);
    case MotifKind::kChordalCycle4:
      return choose2(m) + m * (di + dj);
    case MotifKind::kCycle4:
      return di * dj;
    case MotifKind::kStar4:
      return choose2(di) + choose2(dj);
    case MotifKind::kPath4:
      return di * dj + (di + dj) * delta;
    case MotifKind::kTailedTriangle4:
      return choose2(di) + choose2(dj) + m * (di + dj + delta);
  }
  return 0;
}

std::vector<ScoredCandidate> rank_pairs(const Graph& g, std::span<const NodePair> candidates,
                                        MotifKind kind, std::size_t k,
                                        const RankOptions& options, RankStats* stats) {
  if (k == 0) throw UsageError("k must be positive");
  std::vector<NodePair> pairs(candidates.begin(), candidates.end());
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& p : pairs) {
    if (g.has_edge(p.i, p.j)) throw DataError("pair is an existing edge");
  }
  RankStats local;
  local.candidates = pairs.size();

  std::vector<ScoredCandidate> out;
  if (!options.prune) {
    out.resize(pairs.size());
    parallel_for(pairs.size(), options.threads,
                 [&](unsigned, std::size_t begin, std::size_t end) {
                   ClosureCounter counter(g);
                   for (std::size_t x = begin; x < end; ++x) {
                     out[x] = {pairs[x], counter.count(pairs[x])[kind]};
                   }
                 });
    local.exact_counts = pairs.size();
    std::sort(out.begin(), out.end(), ranks_before);
    if (out.size() > k) out.resize(k);
  } else {
    std::vector<ScoredCandidate> bounded;
    bounded.reserve(pairs.size());
    for (const auto& p : pairs) bounded.push_back({p, upper_bound(g, p, kind)});
    std::sort(bounded.begin(), bounded.end(), ranks_before);

    // Top of the heap is the current k-th best (the worst incumbent).
    std::priority_queue<ScoredCandidate, std::vector<ScoredCandidate>,
                        decltype(&ranks_before)>
        best(&ranks_before);
    ClosureCounter counter(g);
    for (const auto& [pair, bound] : bounded) {
      if (best.size() == k) {
        const ScoredCandidate& kth = best.top();
        if (bound < kth.score) break;
        if (bound == kth.score && kth.pair < pair) continue;
      }
      ScoredCandidate scored{pair, counter.count(pair)[kind]};
      ++local.exact_counts;
      if (best.size() < k) {
        best.push(scored);
      } else if (ranks_before(scored, best.top())) {
        best.pop();
        best.push(scored);
      }
    }
    out.reserve(best.size());
    while (!best.empty()) {
      out.push_back(best.top());
      best.pop();
    }
    std::reverse(out.begin(), out.end());
  }
  local.pruned = local.candidates - local.exact_counts;
  if (stats != nullptr) *stats = local;
  return out;
}

std::vector<NodePair> non_edges_of(const Graph& g, NodeId u) {
  auto nbrs = g.neighbors(u);
  std::vector<NodePair> out;
  auto it = nbrs.begin();
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    while (it != nbrs.end() && *it < v) ++it;
    if (v == u || (it != nbrs.end() && *it == v)) continue;
    out.emplace_back(u, v);
  }
  return out;
}

}  // namespace motifclose
