#include "p3/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "p3/errors.hpp"
#include "p3/unit_interval.hpp"

namespace p3 {

std::vector<ReducedDegreeSequence> caterpillar_sequences(int max_spine) {
  std::vector<ReducedDegreeSequence> out;
  for (int k = 2; k <= max_spine; ++k) {
    ReducedDegreeSequence rds(k, 2);
    rds.front() = rds.back() = 1;
    if (k == 2) {
      out.push_back(rds);
      continue;
    }
    // Odometer over the interior terms.
    while (true) {
      out.push_back(rds);
      int i = k - 2;
      while (i >= 1 && rds[i] == 4) rds[i--] = 2;
      if (i < 1) break;
      ++rds[i];
    }
  }
  return out;
}

Graph random_caterpillar(Rng& rng, int max_n) {
  if (max_n < 2) throw InputError("caterpillar needs at least 2 vertices");
  std::uniform_int_distribution<int> spine_len(2, std::max(2, max_n));
  std::uniform_int_distribution<int> pendants(0, 3);
  while (true) {
    const int k = spine_len(rng);
    int n = k;
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    for (int i = 1; i + 1 < k; ++i) {
      const int extra = pendants(rng);
      for (int j = 0; j < extra; ++j) edges.emplace_back(i, n++);
    }
    if (n > max_n) continue;
    // Shuffle labels so recognition does not see the construction order.
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    for (auto& [u, v] : edges) {
      u = label[u];
      v = label[v];
    }
    return Graph::from_edges(n, edges);
  }
}

namespace {

OrderedGraph sample_unit_interval(Rng& rng, int n, int min_reach, int reach) {
  if (n < 1) throw InputError("unit interval graph needs a vertex");
  std::uniform_int_distribution<int> extra(min_reach - 1, std::max(min_reach - 1, reach));
  // right[p]: last position adjacent to p. Nondecreasing with right[p] > p
  // gives a connected graph whose closed neighborhoods are intervals.
  std::vector<int> right(n);
  for (int p = 0; p < n; ++p) {
    int r = std::min(n - 1, p + 1 + extra(rng));
    if (p > 0) r = std::max(r, right[p - 1]);
    right[p] = r;
  }
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  Graph g(n);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q <= right[p]; ++q) g.add_edge(label[p], label[q]);
  return {std::move(g), std::move(label)};
}

}  // namespace

OrderedGraph random_unit_interval(Rng& rng, int n, int reach) {
  return sample_unit_interval(rng, n, 1, reach);
}

OrderedGraph random_unit_interval(Rng& rng, int n, UigShape shape) {
  std::uniform_int_distribution<int> reach(1, 3);
  // right[p] >= p + 2 leaves no cut vertex, so 2-connected shapes only
  // reject on the singular requirement (and n < 3).
  const int min_reach = shape == UigShape::kConnected ? 1 : 2;
  if (shape == UigShape::kBiconnected && n < 3)
    throw InputError("a 2-connected graph needs at least 3 vertices");
  if (shape == UigShape::kBiconnectedSingular && n < 5)
    throw InputError("a 2-connected unit interval graph with a singular vertex "
                     "needs at least 5 vertices");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto og = sample_unit_interval(rng, n, min_reach, reach(rng) + min_reach - 1);
    if (shape == UigShape::kConnected) return og;
    if (!is_biconnected(og.graph)) continue;
    if (shape == UigShape::kBiconnectedSingular &&
        singular_positions(build_model(og.graph, og.order)).empty())
      continue;
    return og;
  }
  throw ResourceError("could not sample a unit interval graph of that shape");
}

Graph random_connected_graph(Rng& rng, int n, double edge_probability) {
  std::bernoulli_distribution coin(edge_probability);
  while (true) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

namespace {

std::string adjacency_string(const Graph& g, const std::vector<Vertex>& at) {
  const int n = g.order();
  std::string s;
  s.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s.push_back(g.adjacent(at[i], at[j]) ? '1' : '0');
  return s;
}

}  // namespace

std::string canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 10) throw ResourceError("canonical_form supports at most 10 vertices");
  // Iso-invariant vertex classes: degree, then sorted neighbor degrees.
  std::vector<std::pair<std::vector<int>, Vertex>> keyed;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> key{-degree(g, v)};
    std::vector<int> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(-degree(g, w));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(std::move(key), v);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::vector<Vertex>> classes;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) classes.emplace_back();
    classes.back().push_back(keyed[i].second);
  }
  std::string best;
  std::vector<Vertex> at;
  // Try every ordering inside each class, classes in fixed order.
  auto recurse = [&](auto&& self, std::size_t c) -> void {
    if (c == classes.size()) {
      auto s = adjacency_string(g, at);
      if (best.empty() || s > best) best = std::move(s);
      return;
    }
    auto members = classes[c];
    std::sort(members.begin(), members.end());
    do {
      at.insert(at.end(), members.begin(), members.end());
      self(self, c + 1);
      at.resize(at.size() - members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  };
  recurse(recurse, 0);
  std::string classes_tag;
  for (const auto& [key, v] : keyed) classes_tag += std::to_string(-key[0]) + ",";
  return std::to_string(n) + ":" + classes_tag + ":" + best;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 9) throw ResourceError("all_graphs supports 0..9 vertices");
  static std::map<int, std::vector<Graph>> memo;
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  std::map<std::string, Graph> found;
  if (n <= 1) {
    found.emplace(canonical_form(Graph(n)), Graph(n));
  } else {
    // Every graph on n vertices is a graph on n-1 vertices plus one vertex.
    for (const Graph& base : all_graphs(n - 1)) {
      const Vertex fresh = n - 1;
      for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        Graph g(n);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (Vertex u = 0; u < n - 1; ++u)
          if (nb >> u & 1u) g.add_edge(u, fresh);
        found.emplace(canonical_form(g), std::move(g));
      }
    }
  }
  std::vector<Graph> out;
  for (auto& [key, g] : found) out.push_back(std::move(g));
  memo[n] = out;
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (n >= 1 && is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace p3
