#include "p3/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "p3/caterpillar.hpp"
#include "p3/errors.hpp"
#include "p3/generators.hpp"
#include "p3/hereditary.hpp"
#include "p3/io.hpp"

namespace p3 {

ValidationSummary ValidationReport::summary() const {
  ValidationSummary s;
  for (const auto& r : rows) {
    ++s.rows;
    if (r.skipped()) ++s.skipped;
    else if (r.agree()) ++s.agreements;
    else ++s.disagreements;
  }
  return s;
}

void ValidationReport::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.instance < b.instance;
  });
}

void ValidationReport::append(ValidationReport other) {
  for (auto& r : other.rows) rows.push_back(std::move(r));
  for (auto& w : other.warnings) warnings.push_back(std::move(w));
}

int ValidationReport::exit_code() const {
  const auto s = summary();
  if (s.disagreements > 0) return 2;
  if (s.skipped > 0) return 3;
  return 0;
}

namespace {

using Clock = std::chrono::steady_clock;

// Evaluates both sides, timing the pair; a ResourceError on the oracle
// side leaves the oracle empty and records a warning.
void add_row(ValidationReport& report, const std::string& id, const std::string& param,
             const std::function<int()>& formula, const std::function<int()>& oracle,
             bool oracle_allowed) {
  ValidationRow row{id, param, std::nullopt, std::nullopt, 0, ""};
  const auto t0 = Clock::now();
  row.formula = formula();
  if (oracle_allowed) {
    try {
      row.oracle = oracle();
    } catch (const ResourceError& e) {
      row.note = e.what();
    }
  } else {
    row.note = "oracle skipped: instance above --max-oracle-n";
  }
  row.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (!row.note.empty()) report.warnings.push_back(id + " " + param + ": " + row.note);
  report.rows.push_back(std::move(row));
}

std::string padded(int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", i);
  return buf;
}

bool cliques_overlap_twice(const UnitIntervalModel& m) {
  const auto c = m.cliques();
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size() && c[j].lo <= c[i].hi; ++j)
      if (c[i].hi - c[j].lo + 1 < 2) return false;
  return true;
}

}  // namespace

void check_caterpillar(const Graph& g, const std::string& id,
                       const HarnessOptions& opt, ValidationReport& report) {
  const auto cs = recognize_caterpillar(g);
  if (!cs) throw DomainError(id + " is not a caterpillar");
  const bool allowed = g.order() <= opt.max_oracle_n;
  add_row(report, id, "g", [&] { return geodetic_number(*cs); },
          [&] { return geodetic_number_bruteforce(g, opt.limits); }, allowed);
  add_row(report, id, "h", [&] { return hull_number(*cs); },
          [&] { return hull_number_bruteforce(g, opt.limits); }, allowed);
  add_row(report, id, "tau", [&] { return percolation_time(*cs); },
          [&] { return percolation_time_bruteforce(g, opt.limits); }, allowed);
}

void check_unit_interval(const UnitIntervalModel& m, const std::string& id,
                         const HarnessOptions& opt, ValidationReport& report) {
  const Graph& g = m.graph();
  const bool allowed = g.order() <= opt.max_oracle_n;
  std::optional<int> tau;
  auto oracle_tau = [&] {
    if (!tau) tau = percolation_time_bruteforce(g, opt.limits);
    return *tau;
  };
  add_row(report, id, "tau", [&] { return percolation_time_uig(m); }, oracle_tau, allowed);
  add_row(report, id, "diameter", [&] { return diameter_endpoints(m); },
          [&] { return diameter(g); }, true);
  if (!is_biconnected(g)) return;
  add_row(report, id, "tau-2connected", [&] { return percolation_time_2connected(m); },
          oracle_tau, allowed);
  const auto star = star_transform(m);
  add_row(report, id, "star-overlap", [&] { return cliques_overlap_twice(star) ? 1 : 0; },
          [] { return 1; }, true);
  add_row(report, id, "star-tau",
          [&] { return percolation_time_bruteforce(star.graph(), opt.limits); }, oracle_tau,
          allowed && star.size() <= opt.max_oracle_n);
}

namespace {

ValidationReport caterpillar_suite(const CrossvalOptions& opt) {
  ValidationReport report;
  for (const auto& rds : caterpillar_sequences(std::max(2, opt.max_n))) {
    const Graph g = realize_caterpillar(rds);
    if (g.order() > opt.max_n) continue;
    std::string id = "caterpillar/rds=";
    for (std::size_t i = 0; i < rds.size(); ++i) id += (i ? "," : "") + std::to_string(rds[i]);
    check_caterpillar(g, id, opt.harness, report);
  }
  Rng rng(opt.seed);
  for (int i = 0; i < opt.random_count; ++i)
    check_caterpillar(random_caterpillar(rng, std::max(2, opt.max_n)),
                      "caterpillar/random-" + padded(i), opt.harness, report);
  return report;
}

ValidationReport uig_suite(const CrossvalOptions& opt) {
  if (opt.max_n < 3) throw InputError("the uig suite needs max_n >= 3");
  ValidationReport report;
  Rng rng(opt.seed);
  for (int i = 0; i < opt.random_count; ++i) {
    const auto shape = static_cast<UigShape>(i % 3);
    const int lo = shape == UigShape::kBiconnectedSingular ? 5 : 3;
    if (opt.max_n < lo) continue;
    std::uniform_int_distribution<int> size(lo, opt.max_n);
    const auto og = random_unit_interval(rng, size(rng), shape);
    const auto m = build_model(og.graph, og.order);
    check_unit_interval(m, "uig/" + padded(i) + "-" + to_graph6(og.graph), opt.harness,
                        report);
  }
  return report;
}

ValidationReport property_p_suite(const CrossvalOptions& opt) {
  ValidationReport report;
  const auto corpus = property_p_corpus(opt.max_n, opt.seed, opt.random_count);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    const std::string id = "property-p/" + padded(static_cast<int>(i)) + "-" + to_graph6(g);
    bool direct = false;
    add_row(report, id, "property-p", [&] { return has_property_p_by_patterns(g) ? 1 : 0; },
            [&] { return (direct = property_p_bruteforce(g, opt.harness.limits)) ? 1 : 0; },
            true);
    if (direct && g.order() <= opt.harness.max_oracle_n)
      add_row(report, id, "h=g", [&] { return hull_number_bruteforce(g, opt.harness.limits); },
              [&] { return geodetic_number_bruteforce(g, opt.harness.limits); }, true);
  }
  return report;
}

}  // namespace

ValidationReport cmd_crossval(const CrossvalOptions& opt) {
  const bool all = opt.suite == "all";
  if (!all && opt.suite != "caterpillar" && opt.suite != "uig" && opt.suite != "property-p")
    throw InputError("unknown suite '" + opt.suite + "'");
  ValidationReport report;
  if (all || opt.suite == "caterpillar") report.append(caterpillar_suite(opt));
  if (all || opt.suite == "uig") report.append(uig_suite(opt));
  if (all || opt.suite == "property-p") {
    CrossvalOptions p = opt;
    if (all && opt.max_n > 7) {
      p.max_n = 7;
      report.warnings.push_back("property-p part of 'all' limited to 7 vertices");
    }
    report.append(property_p_suite(p));
  }
  report.sort_rows();
  return report;
}

}  // namespace p3
