#include "p3/hereditary.hpp"

#include <algorithm>
#include <random>

#include "p3/errors.hpp"
#include "p3/generators.hpp"

namespace p3 {

const std::vector<ForbiddenPattern>& forbidden_patterns() {
  static const std::vector<ForbiddenPattern> patterns{
      {"diamond", Graph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})},
      {"paw", Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}})},
      {"chair", Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {1, 4}})},
      {"K_{2,3}", complete_bipartite(2, 3)},
  };
  return patterns;
}

std::vector<std::string> induced_patterns(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& p : forbidden_patterns())
    if (contains_induced(g, p.graph)) out.push_back(p.name);
  return out;
}

bool has_property_p_by_patterns(const Graph& g) {
  return std::none_of(forbidden_patterns().begin(), forbidden_patterns().end(),
                      [&](const auto& p) { return contains_induced(g, p.graph); });
}

std::vector<Graph> property_p_corpus(int max_n, std::uint64_t seed,
                                     int samples_per_order) {
  if (max_n > 9)
    throw ResourceError("property P crosscheck supports at most 9 vertices");
  std::vector<Graph> corpus;
  for (const auto& p : forbidden_patterns()) corpus.push_back(p.graph);
  for (int n = 1; n <= std::min(max_n, 7); ++n) {
    auto gs = connected_graphs(n);
    corpus.insert(corpus.end(), gs.begin(), gs.end());
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  for (int n = 8; n <= max_n; ++n)
    for (int i = 0; i < samples_per_order; ++i)
      corpus.push_back(random_connected_graph(rng, n, density(rng)));
  return corpus;
}

PropertyPCrosscheck crosscheck_property_p(int max_n, std::uint64_t seed,
                                          int samples_per_order) {
  PropertyPCrosscheck report;
  const auto corpus = property_p_corpus(max_n, seed, samples_per_order);
  report.exhaustive_up_to = std::min(max_n, 7);
  report.sampled = std::max(0, max_n - 7) * samples_per_order;
  for (const Graph& g : corpus) {
    ++report.checked;
    PropertyPFinding f;
    f.patterns = induced_patterns(g);
    f.by_patterns = f.patterns.empty();
    f.direct = property_p_bruteforce(g);
    if (f.by_patterns == f.direct) continue;
    f.canonical = canonical_form(g);
    f.graph = g;
    (f.by_patterns ? report.reverse_findings : report.forward_violations)
        .push_back(std::move(f));
  }
  for (auto* list : {&report.forward_violations, &report.reverse_findings}) {
    std::sort(list->begin(), list->end(),
              [](const auto& a, const auto& b) { return a.canonical < b.canonical; });
    list->erase(std::unique(list->begin(), list->end(),
                            [](const auto& a, const auto& b) {
                              return a.canonical == b.canonical;
                            }),
                list->end());
  }
  auto& rev = report.reverse_findings;
  for (auto& f : rev)
    f.minimal = std::none_of(rev.begin(), rev.end(), [&](const auto& other) {
      return other.graph.order() < f.graph.order() &&
             contains_induced(f.graph, other.graph);
    });
  return report;
}

bool check_hg_equality(const Graph& g, const OracleLimits& limits) {
  return geodetic_number_bruteforce(g, limits) == hull_number_bruteforce(g, limits);
}

}  // namespace p3
