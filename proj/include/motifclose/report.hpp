#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "motifclose/closure.hpp"
#include "motifclose/eval.hpp"

namespace motifclose {

// CSV emitters. Reals are printed with fixed 6-digit precision, so equal
// reports produce byte-identical files.

// dataset,method,trial,ap,coverage,p@1..p@k_max
void write_trials_csv(std::ostream& out, std::span<const EvalReport> reports);
// method,<dataset>... with mean AP per cell (methods x datasets).
void write_map_table(std::ostream& out, std::span<const EvalReport> reports);
// Same layout with mean coverage.
void write_coverage_table(std::ostream& out, std::span<const EvalReport> reports);
// dataset,method,p@1..p@k_max (trial means).
void write_precision_csv(std::ostream& out, std::span<const EvalReport> reports);
// dataset,timed_pairs,mean_pair_ms. Wall-clock, not reproducible.
void write_timing_csv(std::ostream& out, std::span<const EvalReport> reports);

// i,j,score with ids in the graph's original numbering.
void write_rank_csv(std::ostream& out, const Graph& g, std::span<const ScoredCandidate> ranked);
// Inverse of write_rank_csv. Throws DataError on malformed rows.
std::vector<ScoredCandidate> read_rank_csv(std::istream& in, const Graph& g);

void write_bench_csv(std::ostream& out, const BenchResult& bench);

}  // namespace motifclose
