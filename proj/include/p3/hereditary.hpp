#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "p3/graph.hpp"
#include "p3/percolation.hpp"

namespace p3 {

struct ForbiddenPattern {
  std::string name;  // diamond, paw, chair, K_{2,3}
  Graph graph;
};

// diamond = K_4 minus an edge, paw = triangle plus a pendant,
// chair = P_4 plus a pendant at its second vertex, K_{2,3}.
const std::vector<ForbiddenPattern>& forbidden_patterns();

// Names of the patterns that occur in g as induced subgraphs.
std::vector<std::string> induced_patterns(const Graph& g);

bool has_property_p_by_patterns(const Graph& g);

struct PropertyPFinding {
  Graph graph;
  std::string canonical;
  std::vector<std::string> patterns;  // induced patterns found in graph
  bool by_patterns = false;
  bool direct = false;
  // No smaller reverse finding occurs in graph as an induced subgraph.
  bool minimal = false;
};

struct PropertyPCrosscheck {
  int checked = 0;
  int exhaustive_up_to = 0;
  int sampled = 0;
  // Pattern present but the direct check says the property holds.
  std::vector<PropertyPFinding> forward_violations;
  // No pattern present but the direct check says the property fails:
  // candidates for a missing forbidden graph.
  std::vector<PropertyPFinding> reverse_findings;

  bool agrees() const { return forward_violations.empty() && reverse_findings.empty(); }
};

// The four patterns, then connected graphs on 1..max_n vertices: exhaustive
// up to 7 vertices, `samples_per_order` seeded random graphs for 8 and 9.
// max_n > 9 throws ResourceError.
std::vector<Graph> property_p_corpus(int max_n, std::uint64_t seed = 1,
                                     int samples_per_order = 500);

// Runs property_p_corpus through both checks. Findings are sorted by
// canonical form.
PropertyPCrosscheck crosscheck_property_p(int max_n, std::uint64_t seed = 1,
                                          int samples_per_order = 500);

// geodetic_number_bruteforce(g) == hull_number_bruteforce(g).
bool check_hg_equality(const Graph& g, const OracleLimits& limits = {});

}  // namespace p3
