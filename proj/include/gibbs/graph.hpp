#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gibbs {

using Vertex = std::uint32_t;

// Undirected edge in canonical form, u < v.
struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph: vertex count plus a sorted, duplicate-free set of
// canonical edges. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Edges must already be canonical (u < v < n); order and duplicates are
  // normalized here. Throws DomainError otherwise.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Sorted neighbour list of v.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

struct ComponentLabeling {
  std::vector<std::size_t> label;  // per vertex, 0-based, contiguous
  std::size_t count = 0;
};

// Drops directions, self-loops and duplicates. Without n the order is
// 1 + max id (0 for empty input).
Graph from_edge_list(std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
                     std::optional<std::size_t> n = std::nullopt);

// Whitespace-separated "u v" lines, '#' comments, blank lines allowed. Ids are
// remapped to 0..n-1 in order of first appearance.
Graph parse_edge_list_text(std::string_view text);
Graph read_edge_list_file(const std::string& path);

// Inverse of parse_edge_list_text for graphs it produced: lines are ordered so
// that first appearance reproduces the current ids. Other graphs are written
// faithfully but may be relabeled (and lose isolated vertices) on re-parse.
std::string to_edge_list_text(const Graph& g);

std::vector<std::size_t> degrees(const Graph& g);

// Labels follow the smallest vertex id of each component.
ComponentLabeling connected_components(const Graph& g);

// Subgraph induced by `keep`, vertices renumbered in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Largest component (ties: the one holding the smallest id), ids kept in
// ascending original order.
Graph largest_connected_component(const Graph& g);

// BFS from the highest-degree vertex (smallest id on ties), visiting each layer
// in ascending id, keeping the first ceil(fraction * n) vertices.
Graph bfs_nearest_subgraph(const Graph& g, double fraction);

}  // namespace gibbs
