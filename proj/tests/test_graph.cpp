#include <doctest.h>

#include <algorithm>
#include <random>

#include "p3/errors.hpp"
#include "p3/generators.hpp"
#include "p3/graph.hpp"
#include "p3/hereditary.hpp"

using namespace p3;

namespace {

Graph two_triangles_sharing_vertex() {
  return Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Cut vertices by definition: removal increases the component count.
std::vector<Vertex> naive_cut_vertices(const Graph& g) {
  const auto base = connected_components(g).size();
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Vertex removed[] = {v};
    if (connected_components(remove_vertices(g, removed)).size() > base) out.push_back(v);
  }
  return out;
}

bool naive_contains_induced(const Graph& g, const Graph& h) {
  const int n = g.order(), k = h.order();
  if (k > n) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i)
      if (pick[i]) vs.push_back(i);
    if (isomorphic(induced_subgraph(g, vs), h)) return true;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

}  // namespace

TEST_CASE("graph construction rejects bad edges") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
  CHECK_THROWS_AS(degree(g, -1), InputError);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(1, 0));
}

TEST_CASE("degree") {
  CHECK(degree(path_graph(2), 0) == 1);
  CHECK(degree(star_graph(3), 0) == 3);
}

TEST_CASE("distance and diameter") {
  CHECK(distance(path_graph(4), 0, 3) == 3);
  CHECK(distance(cycle_graph(5), 2, 2) == 0);
  Graph two(2);
  CHECK_FALSE(distance(two, 0, 1).has_value());
  CHECK(diameter(complete_graph(1)) == 0);
  CHECK(diameter(complete_graph(5)) == 1);
  CHECK(diameter(path_graph(7)) == 6);
  CHECK(diameter(cycle_graph(5)) == 2);
  CHECK_THROWS_AS(diameter(two), DomainError);
}

TEST_CASE("distance is a metric on random connected graphs") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    const Graph g = random_connected_graph(rng, 8, 0.3);
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = 0; v < 8; ++v) {
        CHECK(*distance(g, u, v) == *distance(g, v, u));
        for (Vertex w = 0; w < 8; ++w)
          CHECK(*distance(g, u, w) <= *distance(g, u, v) + *distance(g, v, w));
      }
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete_graph(1)));
  CHECK(is_connected(path_graph(4)));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(connected_components(Graph(3)).size() == 3);
}

TEST_CASE("blocks of small graphs") {
  auto k4 = blocks(complete_graph(4));
  CHECK(k4.blocks.size() == 1);
  CHECK(k4.cut_vertices.empty());

  auto p3 = blocks(path_graph(3));
  CHECK(p3.blocks == std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}});
  CHECK(p3.cut_vertices == std::vector<Vertex>{1});

  auto bowtie = blocks(two_triangles_sharing_vertex());
  CHECK(bowtie.blocks.size() == 2);
  CHECK(bowtie.cut_vertices == std::vector<Vertex>{2});
  CHECK(is_biconnected(cycle_graph(4)));
  CHECK_FALSE(is_biconnected(path_graph(3)));
  CHECK_FALSE(is_biconnected(complete_graph(2)));
}

TEST_CASE("cut vertices agree with the removal definition") {
  Rng rng(5);
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> n(1, 10);
    const Graph g = random_connected_graph(rng, n(rng), 0.25);
    CHECK(blocks(g).cut_vertices == naive_cut_vertices(g));
    // Every edge lies in exactly one block.
    for (auto [u, v] : g.edges()) {
      int hits = 0;
      for (const auto& b : blocks(g).blocks)
        hits += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("contains_induced") {
  CHECK(contains_induced(complete_graph(4), complete_graph(3)));
  const Graph diamond = forbidden_patterns()[0].graph;
  CHECK_FALSE(contains_induced(complete_graph(4), diamond));
  CHECK(contains_induced(cycle_graph(4), path_graph(3)));
  const Graph chair = forbidden_patterns()[2].graph;
  CHECK_FALSE(contains_induced(cycle_graph(5), chair));
  CHECK(contains_induced(chair, chair));
}

TEST_CASE("contains_induced agrees with subset enumeration") {
  Rng rng(3);
  for (int it = 0; it < 150; ++it) {
    const Graph g = random_connected_graph(rng, 7, 0.4);
    for (const auto& p : forbidden_patterns())
      CHECK(contains_induced(g, p.graph) == naive_contains_induced(g, p.graph));
  }
}

TEST_CASE("isomorphism and canonical form") {
  const Graph a = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  const Graph b = Graph::from_edges(4, std::vector<Edge>{{2, 0}, {0, 3}, {3, 1}});
  CHECK(isomorphic(a, b));
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK_FALSE(isomorphic(a, star_graph(3)));
  CHECK(canonical_form(a) != canonical_form(star_graph(3)));
}

TEST_CASE("connected graph counts up to 7 vertices") {
  const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == expected[n]);
  CHECK(all_graphs(5).size() == 34);
}
