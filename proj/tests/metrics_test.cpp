#include "motifclose/metrics.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "motifclose/errors.hpp"
#include "motifclose/rng.hpp"

namespace motifclose {
namespace {

std::vector<ScoredPair> make(std::initializer_list<std::pair<double, bool>> rows) {
  std::vector<ScoredPair> out;
  NodeId next = 1;
  for (auto [score, label] : rows) {
    out.push_back({NodePair(0, next++), score, label});
  }
  return out;
}

TEST(AveragePrecision, Fixtures) {
  EXPECT_DOUBLE_EQ(average_precision(make({{3, true}, {2, true}, {1, false}, {0, false}})), 1.0);
  EXPECT_NEAR(average_precision(make({{4, true}, {3, false}, {2, true}, {1, false}})),
              (1.0 + 2.0 / 3.0) / 2.0, 1e-12);
  EXPECT_THROW(average_precision(make({{1, false}})), DataError);
}

TEST(AveragePrecision, InputOrderIrrelevant) {
  auto a = make({{4, true}, {3, false}, {2, true}, {1, false}, {2, false}});
  auto b = a;
  std::reverse(b.begin(), b.end());
  EXPECT_DOUBLE_EQ(average_precision(a), average_precision(b));
}

TEST(AveragePrecision, AllTiedSinglePositive) {
  // One positive uniformly placed among n: E[1/rank] = H_n / n.
  std::vector<ScoredPair> list;
  for (NodeId x = 1; x <= 10; ++x) list.push_back({NodePair(0, x), 1.0, x == 4});
  double harmonic = 0.0;
  for (int r = 1; r <= 10; ++r) harmonic += 1.0 / r;
  EXPECT_NEAR(average_precision(list), harmonic / 10.0, 1e-12);
}

TEST(PrecisionAtK, Fixtures) {
  auto perfect = make({{3, true}, {2, true}, {1, false}, {0, false}});
  EXPECT_DOUBLE_EQ(precision_at_k(perfect, 1), 1.0);
  EXPECT_DOUBLE_EQ(precision_at_k(perfect, 2), 1.0);
  auto mixed = make({{4, true}, {3, false}, {2, true}, {1, false}});
  EXPECT_DOUBLE_EQ(precision_at_k(mixed, 2), 0.5);
  EXPECT_DOUBLE_EQ(precision_at_k(mixed, 4), 0.5);
  EXPECT_THROW(precision_at_k(mixed, 0), DataError);
  EXPECT_THROW(precision_at_k(mixed, 5), DataError);
}

TEST(PrecisionAtK, StraddlingTieGroup) {
  // Top group of 4 holds 1 positive; k = 2 sees half of it in expectation.
  auto list = make({{1, true}, {1, false}, {1, false}, {1, false}, {0, true}});
  EXPECT_DOUBLE_EQ(precision_at_k(list, 2), 0.25);
}

TEST(PrecisionCurve, ClampsBeyondLength) {
  auto list = make({{2, true}, {1, false}});
  auto curve = precision_curve(list, 4);
  ASSERT_EQ(curve.size(), 4u);
  EXPECT_DOUBLE_EQ(curve[0], 1.0);
  EXPECT_DOUBLE_EQ(curve[1], 0.5);
  EXPECT_DOUBLE_EQ(curve[3], 0.5);
}

TEST(Coverage, Fixtures) {
  EXPECT_DOUBLE_EQ(coverage(make({{4, false}, {3, true}, {2, true}, {1, false}})), 0.75);
  EXPECT_DOUBLE_EQ(coverage(make({{4, true}, {3, true}, {2, false}, {1, false}})), 0.5);
  EXPECT_DOUBLE_EQ(coverage(make({{4, true}, {3, false}, {2, false}, {1, true}})), 1.0);
  EXPECT_THROW(coverage(make({{1, false}})), DataError);
}

// Strict-order metrics after breaking ties by a random key.
struct Sampled {
  double ap = 0;
  double coverage = 0;
  std::vector<double> precision;
};

Sampled strict_metrics(std::vector<ScoredPair> list, Rng& rng) {
  std::vector<std::pair<double, std::uint64_t>> keys;
  std::vector<std::size_t> order(list.size());
  for (std::size_t x = 0; x < list.size(); ++x) {
    keys.emplace_back(list[x].score, rng.next());
    order[x] = x;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].first != keys[b].first) return keys[a].first > keys[b].first;
    return keys[a].second < keys[b].second;
  });
  Sampled s;
  std::size_t hits = 0;
  std::size_t last = 0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (list[order[r]].label) {
      ++hits;
      s.ap += static_cast<double>(hits) / static_cast<double>(r + 1);
      last = r + 1;
    }
    s.precision.push_back(static_cast<double>(hits) / static_cast<double>(r + 1));
  }
  s.ap /= static_cast<double>(hits);
  s.coverage = static_cast<double>(last) / static_cast<double>(list.size());
  return s;
}

void expect_monte_carlo_agreement(const std::vector<ScoredPair>& list, std::uint64_t seed) {
  Rng rng(seed, 0);
  constexpr int kShuffles = 100000;
  double ap = 0, cov = 0;
  std::vector<double> prec(list.size(), 0.0);
  for (int s = 0; s < kShuffles; ++s) {
    Sampled m = strict_metrics(list, rng);
    ap += m.ap;
    cov += m.coverage;
    for (std::size_t k = 0; k < prec.size(); ++k) prec[k] += m.precision[k];
  }
  EXPECT_NEAR(average_precision(list), ap / kShuffles, 0.01);
  EXPECT_NEAR(coverage(list), cov / kShuffles, 0.01);
  const auto curve = precision_curve(list, list.size());
  for (std::size_t k = 0; k < prec.size(); ++k) {
    EXPECT_NEAR(curve[k], prec[k] / kShuffles, 0.01) << "k=" << k + 1;
  }
}

TEST(TieHandling, MonteCarloAllTied) {
  expect_monte_carlo_agreement(
      make({{1, true}, {1, false}, {1, false}, {1, true}, {1, false}, {1, false}, {1, true},
            {1, false}, {1, false}, {1, false}}),
      41);
}

TEST(TieHandling, MonteCarloMixedGroups) {
  expect_monte_carlo_agreement(
      make({{5, true}, {5, false}, {5, false}, {3, true}, {3, true}, {3, false}, {3, false},
            {1, false}, {1, true}, {0, false}, {0, true}, {0, false}}),
      42);
}

TEST(TieHandling, MonteCarloIsolatedPositiveInLargeGroup) {
  std::vector<ScoredPair> list = make({{9, true}});
  for (NodeId x = 0; x < 30; ++x) list.push_back({NodePair(1, x + 2), 2.0, x == 17});
  list.push_back({NodePair(5, 1), 0.0, false});
  expect_monte_carlo_agreement(list, 43);
}

TEST(MetricRanges, RandomLists) {
  Rng rng(44, 0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ScoredPair> list;
    const std::size_t n = 1 + rng.below(40);
    for (NodeId x = 0; x < n; ++x) {
      list.push_back({NodePair(0, x + 1), static_cast<double>(rng.below(5)), rng.below(3) == 0});
    }
    list[0].label = true;
    const double ap = average_precision(list);
    EXPECT_GE(ap, 0.0);
    EXPECT_LE(ap, 1.0 + 1e-12);
    const double cov = coverage(list);
    EXPECT_GT(cov, 0.0);
    EXPECT_LE(cov, 1.0 + 1e-12);
    for (double p : precision_curve(list, n)) {
      EXPECT_GE(p, 0.0);
      EXPECT_LE(p, 1.0 + 1e-12);
    }
  }
}

}  // namespace
}  // namespace motifclose
