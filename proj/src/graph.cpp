#include "motifclose/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>

#include <fmt/format.h>

#include "motifclose/errors.hpp"

namespace motifclose {

NodePair::NodePair(NodeId a, NodeId b) {
  if (a == b) throw DataError(fmt::format("self-pair ({}, {}) is not a node pair", a, b));
  i = std::min(a, b);
  j = std::max(a, b);
}

EdgeFormat parse_edge_format(const std::string& name) {
  if (name == "auto") return EdgeFormat::kAuto;
  if (name == "edges") return EdgeFormat::kEdges;
  if (name == "mtx") return EdgeFormat::kMtx;
  throw UsageError(fmt::format("unknown format '{}' (expected edges, mtx or auto)", name));
}

Graph Graph::from_edges(std::size_t num_nodes,
                        std::span<const std::pair<NodeId, NodeId>> edges,
                        LoadStats* stats) {
  if (num_nodes > std::numeric_limits<NodeId>::max()) {
    throw DataError("too many nodes for 32-bit node ids");
  }
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(edges.size() * 2);
  std::size_t self_loops = 0;
  for (auto [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) {
      throw DataError(fmt::format("edge ({}, {}) out of range for {} nodes", u, v, num_nodes));
    }
    if (u == v) {
      ++self_loops;
      continue;
    }
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  const std::size_t before = arcs.size();
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(num_nodes + 1, 0);
  g.targets_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  for (std::size_t u = 0; u < num_nodes; ++u) {
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[u + 1]);
    g.offsets_[u + 1] += g.offsets_[u];
  }
  if (stats != nullptr) {
    stats->self_loops_dropped += self_loops;
    stats->duplicates_dropped += (before - arcs.size()) / 2;
  }
  return g;
}

void Graph::check_node(NodeId u) const {
  if (u >= num_nodes()) {
    throw DataError(fmt::format("node {} out of range (graph has {} nodes)",
                                static_cast<std::uint64_t>(u) + index_base_, num_nodes()));
  }
}

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  check_node(u);
  return neighbors_unchecked(u);
}

std::size_t Graph::degree(NodeId u) const {
  check_node(u);
  return degree_unchecked(u);
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  auto nu = neighbors_unchecked(u);
  auto nv = neighbors_unchecked(v);
  if (nu.size() > nv.size()) {
    std::swap(nu, nv);
    std::swap(u, v);
  }
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<NodeId> Graph::common_neighbors(const NodePair& p) const {
  auto a = neighbors(p.i);
  auto b = neighbors(p.j);
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t Graph::common_neighbor_count(const NodePair& p) const {
  auto a = neighbors(p.i);
  auto b = neighbors(p.j);
  std::size_t count = 0;
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (*x < *y) {
      ++x;
    } else if (*y < *x) {
      ++y;
    } else {
      ++count;
      ++x;
      ++y;
    }
  }
  return count;
}

std::vector<NodePair> Graph::edges() const {
  std::vector<NodePair> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors_unchecked(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edges(std::span<const NodePair> extra) const {
  std::vector<std::pair<NodeId, NodeId>> list;
  list.reserve(num_edges() + extra.size());
  for (const auto& e : edges()) list.emplace_back(e.i, e.j);
  for (const auto& e : extra) list.emplace_back(e.i, e.j);
  Graph g = from_edges(num_nodes(), list);
  g.index_base_ = index_base_;
  return g;
}

Graph Graph::without_edges(std::span<const NodePair> removed) const {
  std::vector<NodePair> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  drop.erase(std::unique(drop.begin(), drop.end()), drop.end());
  for (const auto& e : drop) {
    if (!has_edge(e.i, e.j)) {
      throw DataError(fmt::format("cannot remove non-edge ({}, {})", e.i, e.j));
    }
  }
  std::vector<std::pair<NodeId, NodeId>> list;
  list.reserve(num_edges());
  for (const auto& e : edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) list.emplace_back(e.i, e.j);
  }
  Graph g = from_edges(num_nodes(), list);
  g.index_base_ = index_base_;
  return g;
}

namespace {

bool is_separator(char c) {
  return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_separator(line[pos])) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !is_separator(line[end])) ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      value >= std::numeric_limits<NodeId>::max()) {
    throw DataError(fmt::format("line {}: malformed node id '{}'", line_no, token));
  }
  return value;
}

bool is_comment(std::string_view line) {
  std::size_t pos = 0;
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  return pos < line.size() && (line[pos] == '%' || line[pos] == '#');
}

struct RawPairs {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::uint64_t min_id = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_id = 0;
  bool header_skipped = false;
  std::size_t lines = 0;
};

RawPairs read_raw_pairs(std::istream& in, EdgeFormat format) {
  RawPairs raw;
  std::string line;
  std::size_t line_no = 0;
  bool saw_banner = false;
  bool first_data = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) {
      if (line_no == 1 && line.starts_with("%%MatrixMarket")) saw_banner = true;
      continue;
    }
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (first_data) {
      first_data = false;
      bool header = false;
      if (format == EdgeFormat::kMtx || (format == EdgeFormat::kAuto && saw_banner)) {
        if (tokens.size() != 3) {
          throw DataError(fmt::format("line {}: expected MatrixMarket size header 'rows cols nnz'",
                                      line_no));
        }
        header = true;
      } else if (format == EdgeFormat::kAuto && tokens.size() == 3) {
        // A square "n n nnz" size line; a weighted edge with u == v would
        // be a self-loop and get dropped anyway.
        header = tokens[0] == tokens[1];
      }
      if (header) {
        for (auto t : tokens) parse_id(t, line_no);
        raw.header_skipped = true;
        continue;
      }
    }
    if (tokens.size() < 2) {
      throw DataError(fmt::format("line {}: expected two node ids", line_no));
    }
    std::uint64_t u = parse_id(tokens[0], line_no);
    std::uint64_t v = parse_id(tokens[1], line_no);
    raw.min_id = std::min({raw.min_id, u, v});
    raw.max_id = std::max({raw.max_id, u, v});
    raw.pairs.emplace_back(u, v);
    ++raw.lines;
  }
  return raw;
}

}  // namespace

Graph load_graph(std::istream& in, EdgeFormat format, LoadStats* stats) {
  RawPairs raw = read_raw_pairs(in, format);
  if (raw.pairs.empty()) throw DataError("input contains no edges");

  std::uint64_t base = raw.min_id == 1 ? 1 : 0;
  if (format == EdgeFormat::kMtx) {
    if (raw.min_id == 0) throw DataError("MatrixMarket ids are 1-based but id 0 appears");
    base = 1;
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw.pairs.size());
  for (auto [u, v] : raw.pairs) {
    edges.emplace_back(static_cast<NodeId>(u - base), static_cast<NodeId>(v - base));
  }
  LoadStats local;
  local.lines = raw.lines;
  local.header_skipped = raw.header_skipped;
  Graph g = Graph::from_edges(raw.max_id - base + 1, edges, &local);
  g.set_index_base(static_cast<NodeId>(base));
  if (stats != nullptr) *stats = local;
  return g;
}

Graph load_graph_file(const std::filesystem::path& path, EdgeFormat format, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw DataError(fmt::format("cannot open graph file '{}'", path.string()));
  return load_graph(in, format, stats);
}

std::vector<NodePair> load_pairs(std::istream& in, const Graph& g) {
  std::vector<NodePair> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment(line)) continue;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 2) throw DataError(fmt::format("line {}: expected two node ids", line_no));
    std::uint64_t u = parse_id(tokens[0], line_no);
    std::uint64_t v = parse_id(tokens[1], line_no);
    if (u < g.index_base() || v < g.index_base()) {
      throw DataError(fmt::format("line {}: node id below index base {}", line_no, g.index_base()));
    }
    NodeId a = static_cast<NodeId>(u - g.index_base());
    NodeId b = static_cast<NodeId>(v - g.index_base());
    g.check_node(a);
    g.check_node(b);
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace motifclose
