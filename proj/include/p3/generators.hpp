#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "p3/caterpillar.hpp"
#include "p3/graph.hpp"

namespace p3 {

using Rng = std::mt19937_64;

// Every reduced degree sequence of a caterpillar with spine length
// 2..max_spine: 1, then interior terms over {2,3,4}, then 1.
std::vector<ReducedDegreeSequence> caterpillar_sequences(int max_spine);

// Random caterpillar with at most max_n >= 2 vertices. Spine vertices get
// 0..3 pendant leaves, so the reduced degree cap at 4 is exercised.
Graph random_caterpillar(Rng& rng, int max_n);

struct OrderedGraph {
  Graph graph;
  std::vector<Vertex> order;
};

// Connected unit interval graph on n vertices from a random nondecreasing
// rightmost-neighbor function, with vertex labels shuffled. `reach` bounds
// how far past p+1 a vertex may see.
OrderedGraph random_unit_interval(Rng& rng, int n, int reach = 3);

enum class UigShape { kConnected, kBiconnected, kBiconnectedSingular };

// Rejection sampling on top of random_unit_interval. Throws InputError for
// n < 3 (2-connected) or n < 5 (2-connected with a singular vertex).
OrderedGraph random_unit_interval(Rng& rng, int n, UigShape shape);

// Connected G(n, p) sample (resampled until connected), n >= 1.
Graph random_connected_graph(Rng& rng, int n, double edge_probability);

// Canonical adjacency string: identical for isomorphic graphs, n <= 10.
std::string canonical_form(const Graph& g);

// One representative per isomorphism class, in canonical-form order.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

}  // namespace p3
