#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "p3/harness.hpp"
#include "p3/io.hpp"

namespace p3 {

using Json = nlohmann::ordered_json;

struct CommandResult {
  Json output;
  int exit_code = 0;
};

struct AnalyzeOptions {
  bool oracle = false;
  HarnessOptions harness;
};

// Recognizes the class (caterpillar first, then unit interval, else other)
// and reports the closed-form values; with `oracle` also the exhaustive g, h
// and tau, exit code 2 when they disagree with a formula. Throws DomainError
// for an unrecognized class without `oracle`, ResourceError when the oracle
// is over its cap.
CommandResult cmd_analyze(const GraphDocument& doc, const AnalyzeOptions& opt);

// kind: caterpillar-exhaustive (size = max spine length), caterpillar-random
// (size = max vertices), uig-random, uig-2connected-random (size = vertices),
// all-connected (size = vertices, at most 9). Deterministic for a seed.
std::vector<GraphDocument> cmd_generate(const std::string& kind, int size,
                                        std::uint64_t seed, int count);
Json documents_to_json(const std::vector<GraphDocument>& docs);

CommandResult cmd_propcheck(int max_n, std::uint64_t seed, int samples_per_order);

Json report_to_json(const ValidationReport& report);

// Plain "key: value" rendering of an analysis object.
std::string render_text(const Json& j);
std::string render_report_text(const ValidationReport& report);
std::string render_propcheck_text(const Json& j);

}  // namespace p3
