#include "motifclose/closure.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "motifclose/errors.hpp"
#include "motifclose/oracle.hpp"
#include "test_support.hpp"

namespace motifclose {
namespace {

using testing::parse;
using testing::random_graph;

ClosureVector only(std::initializer_list<std::pair<MotifKind, std::uint64_t>> entries) {
  ClosureVector v;
  for (auto [kind, count] : entries) v[kind] = count;
  return v;
}

struct Fixture {
  const char* name;
  Graph graph;
  NodePair pair;
  ClosureVector expected;
};

std::vector<Fixture> fixtures() {
  using K = MotifKind;
  return {
      {"k4_minus_edge", parse("1 3\n1 4\n2 3\n2 4\n3 4\n"), {0, 1},
       only({{K::kTriangle, 2}, {K::kClique4, 1}})},
      {"path_to_cycle", parse("1 2\n2 3\n3 4\n"), {0, 3}, only({{K::kCycle4, 1}})},
      {"star", Graph::from_edges(4, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {0, 2}}),
       {0, 3}, only({{K::kStar4, 1}})},
      {"paw",
       Graph::from_edges(4, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {0, 2}, {1, 2}}),
       {0, 3}, only({{K::kTailedTriangle4, 1}})},
      {"outer_diamond", parse("1 2\n1 3\n2 3\n3 4\n"), {1, 3},
       only({{K::kTriangle, 1}, {K::kChordalCycle4, 1}})},
  };
}

TEST(ClosureCounts, HandVerifiedFixtures) {
  for (const auto& f : fixtures()) {
    EXPECT_EQ(oracle::oracle_closure_counts(f.graph, f.pair), f.expected) << f.name;
    EXPECT_EQ(closure_counts(f.graph, f.pair), f.expected)
        << f.name << ": " << to_string(closure_counts(f.graph, f.pair));
  }
}

TEST(ClosureCounts, FarApartPairIsAllZero) {
  // 0's only neighbor is a leaf and 4 is isolated: nothing within two hops.
  Graph g = parse("0 1\n2 3\n4 4\n");
  EXPECT_EQ(closure_counts(g, {0, 4}), ClosureVector{});
  // Leaves of two separate edges do close a 4-path.
  Graph two_edges = parse("0 1\n2 3\n");
  EXPECT_EQ(closure_counts(two_edges, {0, 2})[MotifKind::kPath4], 1u);
  Graph isolated = Graph::from_edges(6, std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {2, 3}});
  EXPECT_EQ(closure_counts(isolated, {4, 5}), ClosureVector{});
}

TEST(ClosureCounts, Errors) {
  Graph g = parse("0 1\n1 2\n");
  EXPECT_THROW(closure_counts(g, {0, 1}), DataError);
  EXPECT_THROW(closure_counts(g, {0, 7}), DataError);
}

TEST(ClosureCounts, MatchesOracleOnRandomGraphs) {
  Rng rng(21, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + rng.below(18);
    Graph g = random_graph(n, std::array{0.1, 0.3, 0.5, 0.8}[trial % 4], rng);
    ClosureCounter counter(g);
    for (const auto& p : testing::all_non_edges(g)) {
      const ClosureVector fast = counter.count(p);
      ASSERT_EQ(fast, oracle::oracle_closure_counts(g, p))
          << "n=" << n << " pair=(" << p.i << "," << p.j << ") " << to_string(fast);
      EXPECT_EQ(fast[MotifKind::kTriangle], g.common_neighbor_count(p));
      EXPECT_EQ(closure_counts(g, NodePair(p.j, p.i)), fast);
    }
  }
}

TEST(ClosureCounts, MatchesOracleOnHeavyTailedGraph) {
  Rng rng(22, 0);
  Graph g = testing::preferential_attachment(120, 3, rng);
  ClosureCounter counter(g);
  auto pairs = testing::all_non_edges(g);
  for (std::size_t x = 0; x < pairs.size(); x += 7) {
    ASSERT_EQ(counter.count(pairs[x]), oracle::oracle_closure_counts(g, pairs[x]));
  }
}

TEST(ClosureCounts, CounterReuseLeavesNoState) {
  Rng rng(23, 0);
  Graph g = random_graph(30, 0.3, rng);
  ClosureCounter counter(g);
  auto pairs = testing::all_non_edges(g);
  for (const auto& p : pairs) {
    ASSERT_EQ(counter.count(p), closure_counts(g, p));
  }
  // Second pass in reverse order: reused scratch must give the same answers.
  std::reverse(pairs.begin(), pairs.end());
  for (const auto& p : pairs) ASSERT_EQ(counter.count(p), closure_counts(g, p));
}

TEST(UpperBound, Examples) {
  Graph g = parse("0 1\n1 2\n3 3\n");
  EXPECT_EQ(upper_bound(g, {0, 3}, MotifKind::kTriangle), 0u);
  Graph diamond = parse("1 3\n1 4\n2 3\n2 4\n3 4\n");
  EXPECT_EQ(upper_bound(diamond, {0, 1}, MotifKind::kClique4), 1u);
  Graph path = parse("1 2\n2 3\n3 4\n");
  EXPECT_EQ(upper_bound(path, {0, 3}, MotifKind::kCycle4), 1u);
}

TEST(UpperBound, SoundOnRandomGraphs) {
  Rng rng(24, 0);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(4 + rng.below(22), std::array{0.1, 0.3, 0.5, 0.8}[trial % 4], rng);
    for (const auto& p : testing::all_non_edges(g)) {
      const ClosureVector exact = closure_counts(g, p);
      for (MotifKind kind : kAllMotifKinds) {
        ASSERT_GE(upper_bound(g, p, kind), exact[kind]) << motif_key(kind);
      }
    }
  }
}

std::vector<ScoredCandidate> exhaustive_top_k(const Graph& g, std::span<const NodePair> pairs,
                                              MotifKind kind, std::size_t k) {
  std::vector<ScoredCandidate> all;
  for (const auto& p : pairs) all.push_back({p, oracle::oracle_closure_counts(g, p)[kind]});
  std::sort(all.begin(), all.end(), ranks_before);
  if (all.size() > k) all.resize(k);
  return all;
}

TEST(RankPairs, PrunedEqualsExhaustive) {
  Rng rng(25, 0);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(8 + rng.below(16), std::array{0.15, 0.3, 0.5}[trial % 3], rng);
    auto pairs = testing::all_non_edges(g);
    if (pairs.empty()) continue;
    for (MotifKind kind : kAllMotifKinds) {
      for (std::size_t k : {1u, 5u, 20u}) {
        const auto expected = exhaustive_top_k(g, pairs, kind, k);
        RankOptions pruned;
        RankOptions full;
        full.prune = false;
        ASSERT_EQ(rank_pairs(g, pairs, kind, k, pruned), expected);
        ASSERT_EQ(rank_pairs(g, pairs, kind, k, full), expected);
      }
    }
  }
}

TEST(RankPairs, DiamondSingleCandidate) {
  Graph diamond = parse("1 3\n1 4\n2 3\n2 4\n3 4\n");
  std::vector<NodePair> cands = {{0, 1}};
  auto ranked = rank_pairs(diamond, cands, MotifKind::kClique4, 1);
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0], (ScoredCandidate{{0, 1}, 1}));
}

TEST(RankPairs, KLargerThanCandidatesReturnsAll) {
  Graph g = parse("0 1\n1 2\n2 3\n3 4\n");
  auto pairs = testing::all_non_edges(g);
  auto ranked = rank_pairs(g, pairs, MotifKind::kPath4, 100);
  EXPECT_EQ(ranked.size(), pairs.size());
  EXPECT_TRUE(std::is_sorted(ranked.begin(), ranked.end(), ranks_before));
}

TEST(RankPairs, IsolatedNodeNeverCounted) {
  // Diamond on 0..3 plus isolated node 4.
  Graph g = Graph::from_edges(
      5, std::vector<std::pair<NodeId, NodeId>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  std::vector<NodePair> cands = {{0, 1}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
  RankStats stats;
  auto ranked = rank_pairs(g, cands, MotifKind::kClique4, 1, {}, &stats);
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0], (ScoredCandidate{{0, 1}, 1}));
  EXPECT_EQ(stats.exact_counts, 1u);
  EXPECT_EQ(stats.pruned, 4u);
}

TEST(RankPairs, RejectsEdgesAndZeroK) {
  Graph g = parse("0 1\n1 2\n");
  std::vector<NodePair> bad = {{0, 1}};
  EXPECT_THROW(rank_pairs(g, bad, MotifKind::kPath4, 1), DataError);
  std::vector<NodePair> good = {{0, 2}};
  EXPECT_THROW(rank_pairs(g, good, MotifKind::kPath4, 0), UsageError);
}

TEST(RankPairs, ThreadedExhaustiveIsDeterministic) {
  Rng rng(26, 0);
  Graph g = testing::preferential_attachment(300, 4, rng);
  auto pairs = non_edges_of(g, 0);
  RankOptions one;
  one.prune = false;
  RankOptions many = one;
  many.threads = 8;
  EXPECT_EQ(rank_pairs(g, pairs, MotifKind::kCycle4, 25, one),
            rank_pairs(g, pairs, MotifKind::kCycle4, 25, many));
}

TEST(NonEdgesOf, ExcludesNeighborsAndSelf) {
  Graph g = parse("0 1\n0 2\n3 4\n");
  auto pairs = non_edges_of(g, 0);
  EXPECT_EQ(pairs, (std::vector<NodePair>{{0, 3}, {0, 4}}));
}

}  // namespace
}  // namespace motifclose
