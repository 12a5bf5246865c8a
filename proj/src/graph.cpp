#include "p3/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "p3/errors.hpp"

namespace p3 {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(order()) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v)
    throw InputError("duplicate edge " + std::to_string(u) + " " +
                     std::to_string(v));
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edges_;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int degree(const Graph& g, Vertex v) {
  return static_cast<int>(g.neighbors(v).size());
}

std::vector<std::optional<int>> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
  g.neighbors(source);  // range check
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  g.neighbors(v);
  return bfs_distances(g, u)[v];
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw DomainError("diameter of a disconnected graph");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    for (const auto& d : bfs_distances(g, v)) best = std::max(best, *d);
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (Vertex w : g.neighbors(comp[head]))
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

// Hopcroft-Tarjan lowpoint recursion with an explicit edge stack.
BlockDecomposition blocks(const Graph& g) {
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<Edge> stack;
  int timer = 0;

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[w] == -1) {
        ++children;
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent != -1 || children > 1) is_cut[u] = true;
          std::vector<Vertex> block;
          Edge top;
          do {
            top = stack.back();
            stack.pop_back();
            block.push_back(top.first);
            block.push_back(top.second);
          } while (top != Edge{u, w});
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          out.blocks.push_back(std::move(block));
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    if (disc[v] != -1) continue;
    if (g.neighbors(v).empty()) {
      disc[v] = timer++;
      out.blocks.push_back({v});
      continue;
    }
    dfs(v, -1);
  }
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

bool is_biconnected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return blocks(g).cut_vertices.empty();
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.neighbors(vertices[i]);
    if (index[vertices[i]] != -1) throw InputError("repeated vertex in subset");
    index[vertices[i]] = static_cast<int>(i);
  }
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (index[w] > static_cast<int>(i)) h.add_edge(static_cast<Vertex>(i), index[w]);
  return h;
}

Graph remove_vertices(const Graph& g, std::span<const Vertex> removed,
                      std::vector<Vertex>* kept) {
  std::vector<bool> drop(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : removed) {
    g.neighbors(v);
    drop[v] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop[v]) keep.push_back(v);
  Graph h = induced_subgraph(g, keep);
  if (kept) *kept = std::move(keep);
  return h;
}

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(degree(g, v));
  std::sort(d.begin(), d.end());
  return d;
}

// Does the map pattern-vertex i -> image[i] preserve adjacency and
// non-adjacency?
bool is_induced_embedding(const Graph& g, const Graph& pattern,
                          std::span<const Vertex> image) {
  const int k = pattern.order();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (pattern.adjacent(i, j) != g.adjacent(image[i], image[j])) return false;
  return true;
}

bool subset_matches(const Graph& g, const Graph& pattern,
                    const std::vector<int>& pattern_degrees,
                    std::vector<Vertex>& subset) {
  // Degree-sequence pruning before trying permutations.
  std::vector<int> d;
  d.reserve(subset.size());
  for (Vertex u : subset) {
    int c = 0;
    for (Vertex w : subset)
      if (w != u && g.adjacent(u, w)) ++c;
    d.push_back(c);
  }
  std::sort(d.begin(), d.end());
  if (d != pattern_degrees) return false;
  std::vector<Vertex> image = subset;
  std::sort(image.begin(), image.end());
  do {
    if (is_induced_embedding(g, pattern, image)) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

}  // namespace

bool contains_induced(const Graph& g, const Graph& pattern) {
  const int n = g.order();
  const int k = pattern.order();
  if (k > n) return false;
  if (k == 0) return true;
  const auto pattern_degrees = sorted_degrees(pattern);
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  while (true) {
    if (subset_matches(g, pattern, pattern_degrees, subset)) return true;
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return contains_induced(a, b);
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace p3
