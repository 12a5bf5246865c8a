#pragma once

#include <optional>
#include <span>
#include <vector>

#include "p3/graph.hpp"

namespace p3 {

// Spine degrees capped at 4, read along a leaf-to-leaf dominating path.
using ReducedDegreeSequence = std::vector<int>;
using BasicSequence = std::vector<int>;

struct CaterpillarStructure {
  // v_1..v_k: dominating path whose endpoints are leaves.
  std::vector<Vertex> spine;
  // Every leaf of the tree, sorted.
  std::vector<Vertex> leaves;
  ReducedDegreeSequence rds;

  int leaf_count() const { return static_cast<int>(leaves.size()); }

  // Same caterpillar with the spine read right to left.
  CaterpillarStructure reversed() const;
};

// nullopt when g is not a tree or stripping its leaves does not leave a
// path. Throws InputError when g has fewer than two vertices.
std::optional<CaterpillarStructure> recognize_caterpillar(const Graph& g);

// Builds the caterpillar whose spine 0..k-1 carries the given reduced
// degrees. Spine vertex i of reduced degree d gets max(d - 2, 0) pendant
// leaves, plus extra_leaves[i] more when d == 4 (extra_leaves may be empty).
Graph realize_caterpillar(std::span<const int> rds,
                          std::span<const int> extra_leaves = {});

bool is_basic_sequence(std::span<const int> seq);

// Unique factorization of a sequence over {1,2,3,4} ending in 1 into
// basic sequences, built greedily by the prefix rules. Throws
// MalformedSequence when no factorization exists.
std::vector<BasicSequence> factor_basic(std::span<const int> sigma);

struct BasicDecomposition {
  // lambda^1..lambda^p, the factors after the leading 1 of s(T).
  std::vector<BasicSequence> factors;

  // Basic sequence number p(T).
  int p() const { return static_cast<int>(factors.size()); }

  // The full factorization 1 lambda^1 ... lambda^p, leading term included.
  std::vector<BasicSequence> pieces() const;
};

// Requires a leading and trailing 1; throws MalformedSequence otherwise.
BasicDecomposition decompose(std::span<const int> rds);

// Sum of floor(z / 2) over the lengths z of maximal runs of 2s.
int two_run_measure(std::span<const int> seq);

// rds with every 3 removed.
std::vector<int> drop_threes(std::span<const int> rds);

int geodetic_number(const CaterpillarStructure& cs);
int hull_number(const CaterpillarStructure& cs);

// Closed forms evaluated from the reduced degree sequence and leaf count.
int geodetic_number(std::span<const int> rds, int leaf_count);
int hull_number(std::span<const int> rds, int leaf_count);

// Which formula to use at a degree-3 run flanked by two degree-2 spine
// vertices. The as-written variant is kept for comparison only; it
// underestimates the percolation time (e.g. on 1,2,3,3,3,2,1).
enum class FlankedRunRule { kFarthestEnd, kNearestEndAsWritten };

struct PercolationSequence {
  // Run label: increments at every position except inside a run of 3s.
  std::vector<int> ell;
  // First and last 0-based position carrying the same label.
  std::vector<int> run_first;
  std::vector<int> run_last;
  // Worst-case infection round of each spine vertex.
  std::vector<int> f;
  int F = 0;
};

// Requires rds.front() == rds.back() == 1 and interior terms in {2,3,4}.
PercolationSequence percolation_sequence(
    std::span<const int> rds,
    FlankedRunRule rule = FlankedRunRule::kFarthestEnd);
PercolationSequence percolation_sequence(const CaterpillarStructure& cs);

int percolation_time(const CaterpillarStructure& cs);

}  // namespace p3
