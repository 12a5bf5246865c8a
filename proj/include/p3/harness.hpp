#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p3/graph.hpp"
#include "p3/percolation.hpp"
#include "p3/unit_interval.hpp"

namespace p3 {

// One formula value checked against one oracle value. A row with a missing
// side (oracle over its cap, formula not applicable) counts as skipped.
struct ValidationRow {
  std::string instance;
  std::string parameter;
  std::optional<int> formula;
  std::optional<int> oracle;
  double millis = 0;
  std::string note;

  bool skipped() const { return !formula || !oracle; }
  bool agree() const { return !skipped() && *formula == *oracle; }
};

struct ValidationSummary {
  int rows = 0;
  int agreements = 0;
  int disagreements = 0;
  int skipped = 0;
};

struct ValidationReport {
  std::vector<ValidationRow> rows;
  std::vector<std::string> warnings;

  ValidationSummary summary() const;
  // Stable sort by instance id so parallel or reordered runs print alike.
  void sort_rows();
  void append(ValidationReport other);
  // 0 all agree, 2 some disagreement, 3 nothing disagrees but a cap was hit.
  int exit_code() const;
};

struct HarnessOptions {
  OracleLimits limits;
  // Instances above this many vertices get no oracle value.
  int max_oracle_n = 20;
};

// Rows g, h, tau for a caterpillar against the exhaustive oracles.
void check_caterpillar(const Graph& g, const std::string& id,
                       const HarnessOptions& opt, ValidationReport& report);

// Rows for a connected unit interval model: tau (segment formula), diameter
// (greedy chain vs BFS), and for 2-connected models tau-2connected,
// star-overlap and star-tau.
void check_unit_interval(const UnitIntervalModel& m, const std::string& id,
                         const HarnessOptions& opt, ValidationReport& report);

struct CrossvalOptions {
  std::string suite = "all";  // caterpillar, uig, property-p, all
  int max_n = 10;
  std::uint64_t seed = 1;
  int random_count = 300;
  HarnessOptions harness;
};

// caterpillar: every reduced degree sequence realizing at most max_n
// vertices, plus random_count random caterpillars. uig: random_count random
// connected models cycling through connected / 2-connected / 2-connected
// with a singular vertex. property-p: pattern check vs direct check on
// property_p_corpus(max_n), plus h = g rows for graphs with the property.
// Throws InputError for an unknown suite.
ValidationReport cmd_crossval(const CrossvalOptions& opt);

}  // namespace p3
