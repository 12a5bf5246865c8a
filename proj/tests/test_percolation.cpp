#include <doctest.h>

#include <algorithm>
#include <random>

#include "p3/caterpillar.hpp"
#include "p3/errors.hpp"
#include "p3/generators.hpp"
#include "p3/hereditary.hpp"
#include "p3/percolation.hpp"

using namespace p3;

namespace {

bool subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet random_subset(Rng& rng, int n) {
  std::bernoulli_distribution coin(0.35);
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) s.push_back(v);
  return s;
}

}  // namespace

TEST_CASE("interval operator") {
  const VertexSet ends{0, 2};
  CHECK(interval(path_graph(3), ends) == VertexSet{0, 1, 2});
  CHECK(interval(cycle_graph(4), ends) == VertexSet{0, 1, 2, 3});
  const VertexSet all{0, 1, 2, 3, 4};
  CHECK(interval(cycle_graph(5), all) == all);
  const VertexSet bad{0, 7};
  CHECK_THROWS_AS(interval(path_graph(3), bad), InputError);
}

TEST_CASE("percolate traces") {
  const Graph p4 = path_graph(4);
  const VertexSet s{0, 1, 3};
  auto t = percolate(p4, s);
  CHECK(t.percolated);
  CHECK(t.steps() == 1);
  CHECK(t.time_of[2] == 1);

  const VertexSet all{0, 1, 2, 3};
  CHECK(percolate(p4, all).steps() == 0);

  const VertexSet ends{0, 3};
  auto stuck = percolate(p4, ends);
  CHECK_FALSE(stuck.percolated);
  CHECK(stuck.rounds.back() == ends);
  CHECK_FALSE(stuck.time_of[1].has_value());
}

TEST_CASE("hull closure") {
  const VertexSet ends{0, 2};
  CHECK(hull_closure(path_graph(3), ends) == VertexSet{0, 1, 2});
  CHECK(hull_closure(cycle_graph(4), ends).size() == 4);
  const VertexSet one{3};
  CHECK(hull_closure(complete_graph(5), one) == one);
}

TEST_CASE("oracle values on small graphs") {
  CHECK(hull_number_bruteforce(complete_graph(2)) == 2);
  CHECK(hull_number_bruteforce(path_graph(4)) == 3);
  CHECK(hull_number_bruteforce(star_graph(3)) == 3);
  CHECK(geodetic_number_bruteforce(complete_graph(2)) == 2);
  CHECK(geodetic_number_bruteforce(path_graph(4)) == 3);
  CHECK(geodetic_number_bruteforce(star_graph(3)) == 3);
  for (int n = 3; n <= 7; ++n) CHECK(percolation_time_bruteforce(complete_graph(n)) == 1);
  CHECK(percolation_time_bruteforce(complete_graph(2)) == 0);
  CHECK(percolation_time_bruteforce(path_graph(4)) == 1);
  CHECK(vertex_percolation_time_bruteforce(path_graph(2), 0) == 0);
  CHECK(vertex_percolation_time_bruteforce(path_graph(4), 1) == 1);
}

TEST_CASE("vertex times on the caterpillar 1,2,3,4,2,3,3,1") {
  const std::vector<int> rds{1, 2, 3, 4, 2, 3, 3, 1};
  const Graph t = realize_caterpillar(rds);
  CHECK(vertex_percolation_time_bruteforce(t, 4) == 3);
  CHECK(percolation_time_bruteforce(t) == 3);
  // Leaves are in every percolating set.
  for (Vertex v = 0; v < t.order(); ++v)
    if (degree(t, v) == 1) CHECK(vertex_percolation_time_bruteforce(t, v) == 0);
}

TEST_CASE("property P oracle") {
  for (int n = 1; n <= 6; ++n) CHECK(property_p_bruteforce(complete_graph(n)));
  CHECK_FALSE(property_p_bruteforce(forbidden_patterns()[0].graph));
  CHECK(property_p_bruteforce(path_graph(5)));
}

TEST_CASE("oracle caps") {
  OracleLimits tight;
  tight.max_hull_free = 3;
  tight.max_time_free = 3;
  tight.max_property_n = 4;
  CHECK_THROWS_AS(hull_number_bruteforce(complete_graph(5), tight), ResourceError);
  CHECK_THROWS_AS(percolation_time_bruteforce(complete_graph(5), tight), ResourceError);
  CHECK_THROWS_AS(property_p_bruteforce(complete_graph(5), tight), ResourceError);
  // Leaves are forced, so a big star stays under a small cap.
  CHECK(hull_number_bruteforce(star_graph(30), tight) == 30);
}

TEST_CASE("interval is extensive and monotone, closure idempotent") {
  Rng rng(2024);
  std::uniform_int_distribution<int> size(1, 12);
  for (int it = 0; it < 2000; ++it) {
    const Graph g = random_connected_graph(rng, size(rng), 0.3);
    const VertexSet s = random_subset(rng, g.order());
    VertexSet t = random_subset(rng, g.order());
    VertexSet both;
    std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(both));
    const auto is = interval(g, s);
    CHECK(subset(s, is));
    CHECK(subset(is, interval(g, both)));
    const auto hs = hull_closure(g, s);
    CHECK(hull_closure(g, hs) == hs);
  }
}

TEST_CASE("monotonicity exhaustively on small graphs") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : connected_graphs(n)) {
      const bits::MaskGraph mg(g);
      for (bits::Mask s = 0; s <= mg.all; ++s)
        for (bits::Mask t = s;; t = (t + 1) | s) {
          CHECK((bits::interval(mg, s) & ~bits::interval(mg, t)) == 0);
          if (t == mg.all) break;
        }
    }
}

TEST_CASE("h <= g, degree-2 pairs meet every minimum hull set, tau is the max vertex time") {
  Rng rng(9);
  std::uniform_int_distribution<int> size(2, 9);
  for (int it = 0; it < 120; ++it) {
    const Graph g = random_connected_graph(rng, size(rng), 0.3);
    CHECK(hull_number_bruteforce(g) <= geodetic_number_bruteforce(g));
    for (const auto& s : all_minimum_hull_sets(g))
      for (auto [u, v] : g.edges())
        if (degree(g, u) == 2 && degree(g, v) == 2)
          CHECK((std::binary_search(s.begin(), s.end(), u) ||
                 std::binary_search(s.begin(), s.end(), v)));
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
      best = std::max(best, vertex_percolation_time_bruteforce(g, v));
    CHECK(percolation_time_bruteforce(g) == best);
  }
}

TEST_CASE("minimum hull set is a hull set of minimum size") {
  const Graph c6 = cycle_graph(6);
  const auto s = minimum_hull_set(c6);
  CHECK(static_cast<int>(s.size()) == hull_number_bruteforce(c6));
  CHECK(percolate(c6, s).percolated);
}
