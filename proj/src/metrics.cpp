#include "motifclose/metrics.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "motifclose/errors.hpp"

namespace motifclose {

namespace {

struct TieGroup {
  std::size_t size = 0;
  std::size_t positives = 0;
};

std::vector<TieGroup> tie_groups(std::span<const ScoredPair> ranked) {
  std::vector<std::pair<double, bool>> items;
  items.reserve(ranked.size());
  for (const auto& s : ranked) items.emplace_back(s.score, s.label);
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<TieGroup> groups;
  for (std::size_t x = 0; x < items.size(); ++x) {
    if (x == 0 || items[x].first != items[x - 1].first) groups.emplace_back();
    ++groups.back().size;
    if (items[x].second) ++groups.back().positives;
  }
  return groups;
}

std::size_t count_positives(std::span<const ScoredPair> ranked) {
  return static_cast<std::size_t>(
      std::count_if(ranked.begin(), ranked.end(), [](const auto& s) { return s.label; }));
}

}  // namespace

double average_precision(std::span<const ScoredPair> ranked) {
  const std::size_t total_pos = count_positives(ranked);
  if (total_pos == 0) throw DataError("average precision needs at least one positive");
  double sum = 0.0;
  std::size_t before = 0;
  std::size_t pos_before = 0;
  for (const auto& grp : tie_groups(ranked)) {
    if (grp.positives > 0) {
      // A positive lands on slot s (1..g) with probability 1/g; the other
      // q - 1 positives fill the remaining g - 1 slots uniformly, so on
      // average (s - 1)(q - 1)/(g - 1) of them sit above it.
      const double g = static_cast<double>(grp.size);
      const double q = static_cast<double>(grp.positives);
      double per_positive = 0.0;
      for (std::size_t s = 1; s <= grp.size; ++s) {
        const double above = grp.size > 1 ? (s - 1) * (q - 1) / (g - 1) : 0.0;
        per_positive += (pos_before + 1 + above) / static_cast<double>(before + s);
      }
      sum += q * per_positive / g;
    }
    before += grp.size;
    pos_before += grp.positives;
  }
  return sum / static_cast<double>(total_pos);
}

std::vector<double> precision_curve(std::span<const ScoredPair> ranked, std::size_t k_max) {
  std::vector<double> curve;
  if (ranked.empty()) return curve;
  const auto groups = tie_groups(ranked);
  curve.reserve(k_max);
  std::size_t g = 0;
  std::size_t before = 0;
  std::size_t pos_before = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t kk = std::min(k, ranked.size());
    while (before + groups[g].size < kk) {
      before += groups[g].size;
      pos_before += groups[g].positives;
      ++g;
    }
    // kk - before of the group's slots are inside the top kk.
    const double partial = static_cast<double>(groups[g].positives) *
                           static_cast<double>(kk - before) / static_cast<double>(groups[g].size);
    curve.push_back((static_cast<double>(pos_before) + partial) / static_cast<double>(kk));
  }
  return curve;
}

double precision_at_k(std::span<const ScoredPair> ranked, std::size_t k) {
  if (k == 0 || k > ranked.size()) {
    throw DataError(fmt::format("k = {} out of range [1, {}]", k, ranked.size()));
  }
  return precision_curve(ranked, k).back();
}

double coverage(std::span<const ScoredPair> ranked) {
  if (count_positives(ranked) == 0) throw DataError("coverage needs at least one positive");
  std::size_t before = 0;
  double last_rank = 0.0;
  for (const auto& grp : tie_groups(ranked)) {
    if (grp.positives > 0) {
      // Expected maximum of q slots drawn without replacement from 1..g.
      const double q = static_cast<double>(grp.positives);
      last_rank = static_cast<double>(before) + q * static_cast<double>(grp.size + 1) / (q + 1);
    }
    before += grp.size;
  }
  return last_rank / static_cast<double>(ranked.size());
}

}  // namespace motifclose
