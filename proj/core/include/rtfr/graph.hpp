#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rtfr {

using VertexId = std::uint32_t;

/// Undirected edge, stored with first < second.
struct Edge {
  VertexId first = 0;
  VertexId second = 0;

  friend bool operator==(const Edge&, const Edge&) noexcept = default;
};

/// Immutable simple undirected graph with dense 0-based vertex ids.
///
/// Edges keep their construction order but are canonicalized to u < v.
/// Construction rejects self-loops, out-of-range endpoints and duplicates.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] std::span<const Edge> edges() const noexcept { return edges_; }

  [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(VertexId v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
};

struct ParseOptions {
  /// Renumber the ids in first-seen order instead of sizing by the max id.
  bool remap_ids = false;
};

struct ParseResult {
  Graph graph;
  std::size_t dropped_duplicates = 0;
  std::size_t dropped_self_loops = 0;
  /// original_ids[new_id]; only filled when remapping.
  std::vector<std::uint64_t> original_ids;
};

/// Reads the whitespace edge-list format: one "u v" pair per line, '#'
/// comments, and an optional "|V| <n>" header fixing the vertex count.
ParseResult parse_edge_list(std::istream& in, const ParseOptions& options = {});
ParseResult parse_edge_list(std::string_view text, const ParseOptions& options = {});

/// Writes the "|V| <n>" header followed by one edge per line.
void write_edge_list(std::ostream& out, const Graph& g);
std::string serialize_edge_list(const Graph& g);

/// `cluster_count` disjoint K5 cliques; when `connected`, vertex 0 of each
/// cluster is joined to vertex 0 of the next.
Graph gen_k5_cluster_graph(std::size_t cluster_count, bool connected);

/// Complete binary tree, root at depth 0: 2^(depth+1) - 1 vertices, vertex i
/// has children 2i+1 and 2i+2.
Graph gen_binary_tree(unsigned depth);

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  double mean_degree = 0.0;
  std::size_t min_component_vertices = 0;
  std::size_t max_component_vertices = 0;
  double mean_component_vertices = 0.0;
};

/// Component labels in order of the smallest contained vertex id.
std::vector<std::size_t> component_labels(const Graph& g);

GraphStats graph_stats(const Graph& g);

/// Header plus one row:
/// vertices,edges,components,min_deg,max_deg,mean_deg,min_cvert,max_cvert,mean_cvert
void write_stats_csv(std::ostream& out, const GraphStats& s);

}  // namespace rtfr
