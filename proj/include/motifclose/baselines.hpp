#pragma once

#include <optional>
#include <string_view>

#include "motifclose/graph.hpp"

namespace motifclose {

// Closing-triangle scores.
enum class BaselineKind { kCommonNeighbors, kJaccard, kAdamicAdar };

std::string_view baseline_key(BaselineKind kind);        // "CN", "JACCARD", "ADAMIC_ADAR"
std::string_view baseline_flag_name(BaselineKind kind);  // "cn", "jaccard", "adamic-adar"
std::optional<BaselineKind> parse_baseline_kind(std::string_view name);

// CN = |N(i) & N(j)|; Jaccard = CN / |N(i) | N(j)| (0 when both degrees are
// 0); Adamic/Adar = sum over common neighbors w of 1 / ln deg(w). A common
// neighbor of a non-adjacent pair has degree >= 2, so the log is positive.
// Throws DataError if the pair is an existing edge.
double baseline_score(const Graph& g, const NodePair& p, BaselineKind kind);

}  // namespace motifclose
