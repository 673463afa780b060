#include "motifclose/report.hpp"

#include <charconv>
#include <string>

#include <fmt/format.h>

#include "motifclose/errors.hpp"

namespace motifclose {

namespace {

void write_precision_header(std::ostream& out, std::size_t k_max) {
  for (std::size_t k = 1; k <= k_max; ++k) out << ",p@" << k;
}

void write_precision_values(std::ostream& out, std::span<const double> values) {
  for (double v : values) out << fmt::format(",{:.6f}", v);
}

std::size_t common_k_max(std::span<const EvalReport> reports) {
  std::size_t k_max = 0;
  for (const auto& r : reports) k_max = std::max(k_max, r.k_max);
  return k_max;
}

template <typename Cell>
void write_method_table(std::ostream& out, std::span<const EvalReport> reports, Cell cell) {
  out << "method";
  for (const auto& r : reports) out << ',' << r.dataset;
  out << '\n';
  if (reports.empty()) return;
  for (std::size_t m = 0; m < reports.front().methods.size(); ++m) {
    out << reports.front().methods[m].name;
    for (const auto& r : reports) {
      out << (m < r.methods.size() ? fmt::format(",{:.6f}", cell(r.methods[m])) : ",");
    }
    out << '\n';
  }
}

}  // namespace

void write_trials_csv(std::ostream& out, std::span<const EvalReport> reports) {
  out << "dataset,method,trial,ap,coverage";
  write_precision_header(out, common_k_max(reports));
  out << '\n';
  for (const auto& r : reports) {
    for (const auto& m : r.methods) {
      for (std::size_t t = 0; t < m.trials.size(); ++t) {
        const auto& tm = m.trials[t];
        out << fmt::format("{},{},{},{:.6f},{:.6f}", r.dataset, m.name, t, tm.average_precision,
                           tm.coverage);
        write_precision_values(out, tm.precision);
        out << '\n';
      }
    }
  }
}

void write_map_table(std::ostream& out, std::span<const EvalReport> reports) {
  write_method_table(out, reports, [](const MethodSummary& m) { return m.map; });
}

void write_coverage_table(std::ostream& out, std::span<const EvalReport> reports) {
  write_method_table(out, reports, [](const MethodSummary& m) { return m.mean_coverage; });
}

void write_precision_csv(std::ostream& out, std::span<const EvalReport> reports) {
  out << "dataset,method";
  write_precision_header(out, common_k_max(reports));
  out << '\n';
  for (const auto& r : reports) {
    for (const auto& m : r.methods) {
      out << r.dataset << ',' << m.name;
      write_precision_values(out, m.mean_precision);
      out << '\n';
    }
  }
}

void write_timing_csv(std::ostream& out, std::span<const EvalReport> reports) {
  out << "dataset,timed_pairs,mean_pair_ms\n";
  for (const auto& r : reports) {
    out << fmt::format("{},{},{:.6f}\n", r.dataset, r.timed_pairs, r.mean_pair_ms);
  }
}

void write_rank_csv(std::ostream& out, const Graph& g, std::span<const ScoredCandidate> ranked) {
  const std::uint64_t base = g.index_base();
  out << "i,j,score\n";
  for (const auto& c : ranked) {
    out << fmt::format("{},{},{}\n", c.pair.i + base, c.pair.j + base, c.score);
  }
}

std::vector<ScoredCandidate> read_rank_csv(std::istream& in, const Graph& g) {
  std::vector<ScoredCandidate> out;
  std::string line;
  std::size_t line_no = 0;
  const std::uint64_t base = g.index_base();
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || (line_no == 1 && line == "i,j,score")) continue;
    std::uint64_t fields[3] = {};
    const char* ptr = line.data();
    const char* end = line.data() + line.size();
    for (int f = 0; f < 3; ++f) {
      auto [next, ec] = std::from_chars(ptr, end, fields[f]);
      if (ec != std::errc() || (f < 2 && (next == end || *next != ',')) ||
          (f == 2 && next != end)) {
        throw DataError(fmt::format("rank csv line {}: malformed row '{}'", line_no, line));
      }
      ptr = next + 1;
    }
    if (fields[0] < base || fields[1] < base) {
      throw DataError(fmt::format("rank csv line {}: id below index base", line_no));
    }
    NodePair p(static_cast<NodeId>(fields[0] - base), static_cast<NodeId>(fields[1] - base));
    g.check_node(p.j);
    out.push_back({p, fields[2]});
  }
  return out;
}

void write_bench_csv(std::ostream& out, const BenchResult& bench) {
  out << "pairs,mean_ms,median_ms,p99_ms\n";
  out << fmt::format("{},{:.6f},{:.6f},{:.6f}\n", bench.pairs, bench.mean_ms, bench.median_ms,
                     bench.p99_ms);
}

}  // namespace motifclose
