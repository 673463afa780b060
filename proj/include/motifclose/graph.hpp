#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace motifclose {

using NodeId = std::uint32_t;

// Unordered node pair stored canonically (i < j).
struct NodePair {
  NodeId i = 0;
  NodeId j = 0;

  NodePair() = default;
  // Throws DataError on a self-pair.
  NodePair(NodeId a, NodeId b);

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

enum class EdgeFormat {
  kAuto,   // header heuristic plus 0/1-index detection
  kEdges,  // plain edge list, 0/1-index detection, no header
  kMtx,    // MatrixMarket coordinate: size header required, 1-indexed
};

// Parses "edges" / "mtx" / "auto". Throws UsageError otherwise.
EdgeFormat parse_edge_format(const std::string& name);

struct LoadStats {
  std::size_t lines = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  bool header_skipped = false;
};

// Immutable undirected simple graph in compressed adjacency form.
// Neighbor lists are strictly increasing and never contain the owner.
class Graph {
 public:
  Graph() = default;

  // Builds from an arbitrary edge list: orientation is ignored, self-loops
  // and duplicates are dropped. Every endpoint must be < num_nodes.
  static Graph from_edges(std::size_t num_nodes,
                          std::span<const std::pair<NodeId, NodeId>> edges,
                          LoadStats* stats = nullptr);

  std::size_t num_nodes() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return targets_.size() / 2; }
  std::size_t max_degree() const { return max_degree_; }

  // First id in the source file. Dense node u is labelled u + index_base().
  NodeId index_base() const { return index_base_; }
  void set_index_base(NodeId base) { index_base_ = base; }

  // Range-checked.
  std::span<const NodeId> neighbors(NodeId u) const;
  std::size_t degree(NodeId u) const;

  // Unchecked hot-path accessors; callers guarantee u < num_nodes().
  std::span<const NodeId> neighbors_unchecked(NodeId u) const {
    return {targets_.data() + offsets_[u], targets_.data() + offsets_[u + 1]};
  }
  std::size_t degree_unchecked(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  // Binary search in the shorter of the two lists.
  bool has_edge(NodeId u, NodeId v) const;

  // Sorted intersection of the two neighbor lists (linear merge).
  std::vector<NodeId> common_neighbors(const NodePair& p) const;
  std::size_t common_neighbor_count(const NodePair& p) const;

  // Every edge once, canonical, in lexicographic order.
  std::vector<NodePair> edges() const;

  // Copies with edges added or removed. Removal of a non-edge throws.
  Graph with_edges(std::span<const NodePair> extra) const;
  Graph without_edges(std::span<const NodePair> removed) const;

  void check_node(NodeId u) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::size_t max_degree_ = 0;
  NodeId index_base_ = 0;
};

// Edge-list loader. Lines starting with '%' or '#' are comments; tokens are
// separated by whitespace or commas; columns past the second are ignored.
// If the smallest id seen is 1 and 0 never appears, ids are shifted by -1.
Graph load_graph(std::istream& in, EdgeFormat format = EdgeFormat::kAuto,
                 LoadStats* stats = nullptr);
Graph load_graph_file(const std::filesystem::path& path,
                      EdgeFormat format = EdgeFormat::kAuto,
                      LoadStats* stats = nullptr);

// Reads node pairs in the same textual format as edges, converted to dense
// ids of `g` using its index base. Self-pairs and out-of-range ids throw.
std::vector<NodePair> load_pairs(std::istream& in, const Graph& g);

}  // namespace motifclose
