#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace p3 {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/**
   Undirected simple graph on vertices 0..n-1.

   Neighbor lists are kept sorted. Self-loops and parallel edges are rejected
   at insertion time, so every constructed Graph is simple and symmetric.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  // Throws InputError on self-loops, duplicates or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  void add_edge(Vertex u, Vertex v);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edges_ = 0;
};

struct BlockDecomposition {
  // Vertex sets of the biconnected components, each sorted. An isolated
  // vertex forms a singleton block.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
};

int degree(const Graph& g, Vertex v);

// BFS hop counts from `source`; unreachable vertices get std::nullopt.
std::vector<std::optional<int>> bfs_distances(const Graph& g, Vertex source);

// Shortest-path length, or std::nullopt when u and v lie in different
// components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

// Throws DomainError for a disconnected graph.
int diameter(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

BlockDecomposition blocks(const Graph& g);

// Connected, at least 3 vertices, no cut vertex.
bool is_biconnected(const Graph& g);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph remove_vertices(const Graph& g, std::span<const Vertex> removed,
                      std::vector<Vertex>* kept = nullptr);

bool contains_induced(const Graph& g, const Graph& pattern);

// True when the two graphs are isomorphic. Exhaustive; meant for n <= 9.
bool isomorphic(const Graph& a, const Graph& b);

// Small named families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

}  // namespace p3
