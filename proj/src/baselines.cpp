#include "motifclose/baselines.hpp"

#include <cmath>

#include "motifclose/errors.hpp"

namespace motifclose {

std::string_view baseline_key(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kCommonNeighbors: return "CN";
    case BaselineKind::kJaccard: return "JACCARD";
    case BaselineKind::kAdamicAdar: return "ADAMIC_ADAR";
  }
  return "";
}

std::string_view baseline_flag_name(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kCommonNeighbors: return "cn";
    case BaselineKind::kJaccard: return "jaccard";
    case BaselineKind::kAdamicAdar: return "adamic-adar";
  }
  return "";
}

std::optional<BaselineKind> parse_baseline_kind(std::string_view name) {
  for (auto kind : {BaselineKind::kCommonNeighbors, BaselineKind::kJaccard,
                    BaselineKind::kAdamicAdar}) {
    if (name == baseline_key(kind) || name == baseline_flag_name(kind)) return kind;
  }
  return std::nullopt;
}

double baseline_score(const Graph& g, const NodePair& p, BaselineKind kind) {
  if (g.has_edge(p.i, p.j)) throw DataError("pair is an existing edge");
  switch (kind) {
    case BaselineKind::kCommonNeighbors:
      return static_cast<double>(g.common_neighbor_count(p));
    case BaselineKind::kJaccard: {
      const double t = static_cast<double>(g.common_neighbor_count(p));
      const double uni = static_cast<double>(g.degree(p.i) + g.degree(p.j)) - t;
      return uni == 0.0 ? 0.0 : t / uni;
    }
    case BaselineKind::kAdamicAdar: {
      double sum = 0.0;
      for (NodeId w : g.common_neighbors(p)) {
        sum += 1.0 / std::log(static_cast<double>(g.degree_unchecked(w)));
      }
      return sum;
    }
  }
  return 0.0;
}

}  // namespace motifclose
