#pragma once

// Simple undirected graphs with sorted adjacency lists.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace crc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;
  /// Throws InputError on loops, out-of-range endpoints or repeated edges.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);
  /// Throws InputError unless the lists describe a symmetric loop-free simple graph.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const noexcept { return adj_[v]; }
  std::size_t degree(Vertex v) const noexcept { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const noexcept;
  /// Every edge once as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Empty, or one label per vertex.
  void set_labels(std::vector<std::string> labels);

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
  std::vector<std::string> labels_;
};

inline constexpr int kUnreachable = -1;

/// Distances from root; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex root);
bool is_connected(const Graph& g);
/// Vertex sets of the components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Subgraph induced on the neighbours of v, in adjacency order.
Graph local_graph(const Graph& g, Vertex v);

/// Cartesian product; vertex (a, b) is numbered a + |G1| * b.
Graph graph_product(const Graph& g1, const Graph& g2);

/// Every pair of `vertices` is adjacent.
bool is_clique(const Graph& g, std::span<const Vertex> vertices);
/// Connected 2-regular graph (a single cycle) on at least three vertices.
bool is_cycle(const Graph& g);

}  // namespace crc
