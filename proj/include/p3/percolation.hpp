#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "p3/graph.hpp"

namespace p3 {

// Sorted list of distinct vertices.
using VertexSet = std::vector<Vertex>;

// Round-by-round record of 2-neighbor bootstrap percolation.
struct PercolationTrace {
  // rounds[0] is the seed set; each later round strictly grows the previous
  // one; the last entry is a fixpoint of the interval operator.
  std::vector<VertexSet> rounds;
  // Round in which each vertex was first infected; nullopt if never.
  std::vector<std::optional<int>> time_of;
  bool percolated = false;

  // Number of infection rounds (the percolation time when percolated).
  int steps() const { return static_cast<int>(rounds.size()) - 1; }
};

// One round: s plus every outside vertex with at least two neighbors in s.
VertexSet interval(const Graph& g, std::span<const Vertex> s);

PercolationTrace percolate(const Graph& g, std::span<const Vertex> s);

// Smallest P3-convex superset of s.
VertexSet hull_closure(const Graph& g, std::span<const Vertex> s);

/**
   Caps for the exhaustive oracles.

   Vertices of degree below 2 can never be infected, so every hull set,
   geodetic set and percolating set contains them. The searches fix those
   vertices and enumerate subsets of the remaining ones; the caps bound the
   number of enumerated vertices. The property-P check enumerates all
   subsets, so its cap is on the vertex count.
 */
struct OracleLimits {
  int max_hull_free = 20;
  int max_time_free = 18;
  int max_property_n = 16;
};

int hull_number_bruteforce(const Graph& g, const OracleLimits& limits = {});
int geodetic_number_bruteforce(const Graph& g, const OracleLimits& limits = {});

// The first minimum hull set in ascending-cardinality, lexicographic order.
VertexSet minimum_hull_set(const Graph& g, const OracleLimits& limits = {});

// Every hull set of minimum cardinality.
std::vector<VertexSet> all_minimum_hull_sets(const Graph& g,
                                             const OracleLimits& limits = {});

// max over all percolating sets R of the rounds needed by R.
int percolation_time_bruteforce(const Graph& g, const OracleLimits& limits = {});

// max over all percolating sets S of the round in which v is infected.
int vertex_percolation_time_bruteforce(const Graph& g, Vertex v,
                                       const OracleLimits& limits = {});

// Does I(I(S)) == I(S) hold for every vertex subset S?
bool property_p_bruteforce(const Graph& g, const OracleLimits& limits = {});

namespace bits {

// Bitmask view of a graph with at most 64 vertices, used by the oracles.
using Mask = std::uint64_t;

struct MaskGraph {
  explicit MaskGraph(const Graph& g);

  int n;
  std::vector<Mask> nbr;
  Mask all;
};

Mask interval(const MaskGraph& g, Mask s);
Mask closure(const MaskGraph& g, Mask s);
// Rounds until s infects everything, or nullopt if it never does.
std::optional<int> percolation_time(const MaskGraph& g, Mask s);

Mask to_mask(std::span<const Vertex> s);
VertexSet from_mask(Mask m);

}  // namespace bits

}  // namespace p3
