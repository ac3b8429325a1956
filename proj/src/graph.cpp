#include "crc/graph.hpp"

#include <algorithm>

#include "crc/error.hpp"

namespace crc {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  Graph g;
  const std::size_t n = adjacency.size();
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw InputError("repeated edge at vertex " + std::to_string(v));
    for (Vertex w : list) {
      if (w >= n) throw InputError("neighbour " + std::to_string(w) + " out of range");
      if (w == v) throw InputError("loop at vertex " + std::to_string(v));
    }
    g.edge_count_ += list.size();
  }
  g.adj_ = std::move(adjacency);
  for (std::size_t v = 0; v < n; ++v)
    for (Vertex w : g.adj_[v])
      if (!g.adjacent(w, static_cast<Vertex>(v)))
        throw InputError("adjacency is not symmetric at (" + std::to_string(v) + "," + std::to_string(w) + ")");
  g.edge_count_ /= 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (u >= adj_.size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != adj_.size()) throw InputError("label count does not match vertex count");
  labels_ = std::move(labels);
}

std::vector<int> bfs_distances(const Graph& g, Vertex root) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue{root};
  dist[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u))
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), kUnreachable) == d.end();
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members{s};
    comp[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (Vertex v : g.neighbors(members[head]))
        if (comp[v] < 0) {
          comp[v] = id;
          members.push_back(v);
        }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::vector<Vertex>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.adjacent(vertices[i], vertices[j])) {
        adj[i].push_back(static_cast<Vertex>(j));
        adj[j].push_back(static_cast<Vertex>(i));
      }
  return Graph::from_adjacency(std::move(adj));
}

Graph local_graph(const Graph& g, Vertex v) { return induced_subgraph(g, g.neighbors(v)); }

Graph graph_product(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  std::vector<std::vector<Vertex>> adj(n1 * n2);
  for (std::size_t b = 0; b < n2; ++b)
    for (std::size_t a = 0; a < n1; ++a) {
      auto& list = adj[a + n1 * b];
      for (Vertex x : g1.neighbors(static_cast<Vertex>(a))) list.push_back(static_cast<Vertex>(x + n1 * b));
      for (Vertex y : g2.neighbors(static_cast<Vertex>(b))) list.push_back(static_cast<Vertex>(a + n1 * y));
    }
  return Graph::from_adjacency(std::move(adj));
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_cycle(const Graph& g) {
  if (g.vertex_count() < 3) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

}  // namespace crc
