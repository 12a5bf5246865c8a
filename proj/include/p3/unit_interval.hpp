#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "p3/graph.hpp"

namespace p3 {

// Maximal clique occupying order positions lo..hi (inclusive).
struct CliqueInterval {
  int lo = 0;
  int hi = 0;

  int size() const { return hi - lo + 1; }
  bool operator==(const CliqueInterval&) const = default;
};

/**
   A graph together with a unit interval order: every closed neighborhood
   occupies consecutive positions. Only build_model (and the helpers below
   that go through it) can create one, so a model is always valid.
 */
class UnitIntervalModel {
 public:
  const Graph& graph() const { return graph_; }
  int size() const { return graph_.order(); }

  // order()[p] is the vertex at position p.
  std::span<const Vertex> order() const { return order_; }
  int position(Vertex v) const { return position_[v]; }
  Vertex at(int pos) const { return order_[pos]; }

  // Maximal cliques sorted by left endpoint; both endpoints strictly
  // increase along the list.
  std::span<const CliqueInterval> cliques() const { return cliques_; }

  // Positions of the leftmost / rightmost neighbor of the vertex at `pos`
  // (the position itself for an isolated vertex).
  int leftmost_neighbor(int pos) const { return reach_left_[pos]; }
  int rightmost_neighbor(int pos) const { return reach_right_[pos]; }

  // Degree of the vertex at `pos`.
  int degree_at(int pos) const;

 private:
  friend UnitIntervalModel build_model(const Graph& g, std::vector<Vertex> order);

  Graph graph_;
  std::vector<Vertex> order_;
  std::vector<int> position_;
  std::vector<CliqueInterval> cliques_;
  std::vector<int> reach_left_;
  std::vector<int> reach_right_;
};

// Throws InputError when `order` is not a permutation of V(g) and
// NotUnitInterval when some closed neighborhood is not consecutive.
UnitIntervalModel build_model(const Graph& g, std::vector<Vertex> order);

// The graph on positions 0..n-1 whose adjacency is "both positions lie in a
// common interval", with the identity order.
UnitIntervalModel model_from_cliques(int n, std::span<const CliqueInterval> cliques);

// Subgraph induced by positions lo..hi, re-indexed from 0, identity order.
UnitIntervalModel submodel(const UnitIntervalModel& m, int lo, int hi);

// Finds a unit interval order, or nullopt when none exists. Exact search
// over orders in which consecutive vertices are adjacent; throws
// ResourceError if the search exceeds its node budget.
std::optional<UnitIntervalModel> recognize_unit_interval(const Graph& g);

// Length of the greedy rightmost-neighbor chain from the first to the last
// position. Throws DomainError for a disconnected model.
int diameter_endpoints(const UnitIntervalModel& m);

// Positions whose vertex is the whole intersection of two maximal cliques.
std::vector<int> singular_positions(const UnitIntervalModel& m);

struct StarExpansion {
  UnitIntervalModel model;
  // Singular positions of the input, in input coordinates.
  std::vector<int> singular;
  // Position of each input position in the expanded model.
  std::vector<int> position_map;
};

// Inserts one position after each singular position, left to right, shifting
// clique endpoints so that intersecting cliques share at least two vertices.
// Requires a 2-connected model with at least 3 vertices (DomainError).
StarExpansion star_expansion(const UnitIntervalModel& m);
UnitIntervalModel star_transform(const UnitIntervalModel& m);

// Percolation time of a 2-connected model: diameter of its expansion.
int percolation_time_2connected(const UnitIntervalModel& m);

// Blocks of a connected model as position intervals, left to right;
// consecutive blocks share their boundary cut vertex.
std::vector<CliqueInterval> block_intervals(const UnitIntervalModel& m);

// Sum over the blocks of the diameter of the block's expansion (a bridge
// contributes 1, a single vertex 0).
int block_expansion_diameter_sum(const UnitIntervalModel& m);

enum class SegmentCase {
  kEdge,              // two vertices
  kWhole,             // spans v_1..v_n, both ends of degree >= 2
  kTrimLeft,          // drop the left end, +1
  kTrimRight,         // drop the right end, +1
  kTrimBothPendant,   // both ends pendant extremes, drop both, +1
  kTrimBothInterior,  // drop both ends, +2
};

std::string_view to_string(SegmentCase c);

struct SpecialSegment {
  int lo = 0;
  int hi = 0;
  SegmentCase kind = SegmentCase::kEdge;
  int t = 0;
};

// Splits a connected model (n >= 3) at its degree-2 cut vertices and
// evaluates each piece. Throws DomainError when disconnected or n < 3, and
// ConsistencyError when a piece matches zero or several cases.
std::vector<SpecialSegment> special_segments(const UnitIntervalModel& m);

// Percolation time of a connected unit interval graph from its model.
int percolation_time_uig(const UnitIntervalModel& m);

}  // namespace p3
