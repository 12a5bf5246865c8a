#include "p3/commands.hpp"

#include <sstream>

#include "p3/caterpillar.hpp"
#include "p3/errors.hpp"
#include "p3/generators.hpp"
#include "p3/hereditary.hpp"
#include "p3/percolation.hpp"
#include "p3/unit_interval.hpp"

namespace p3 {

namespace {

Json caterpillar_json(const CaterpillarStructure& cs) {
  Json j;
  j["class"] = "caterpillar";
  j["spine"] = cs.spine;
  j["rds"] = cs.rds;
  const auto dec = decompose(cs.rds);
  j["factors"] = dec.pieces();
  j["p"] = dec.p();
  j["g"] = geodetic_number(cs);
  j["h"] = hull_number(cs);
  const auto seq = percolation_sequence(cs);
  j["f"] = seq.f;
  j["F"] = seq.F;
  j["tau"] = seq.F;
  return j;
}

Json unit_interval_json(const UnitIntervalModel& m) {
  Json j;
  j["class"] = "unit-interval";
  j["order"] = std::vector<Vertex>(m.order().begin(), m.order().end());
  Json cliques = Json::array();
  for (const auto& c : m.cliques()) {
    std::vector<Vertex> members;
    for (int p = c.lo; p <= c.hi; ++p) members.push_back(m.at(p));
    cliques.push_back(members);
  }
  j["cliques"] = cliques;
  std::vector<Vertex> singular;
  for (int p : singular_positions(m)) singular.push_back(m.at(p));
  j["singular"] = singular;
  if (!is_connected(m.graph())) {
    j["connected"] = false;
    return j;
  }
  j["diameter"] = diameter_endpoints(m);
  const bool biconnected = is_biconnected(m.graph());
  j["biconnected"] = biconnected;
  if (biconnected) j["diam_star"] = percolation_time_2connected(m);
  if (m.size() >= 3) {
    Json segs = Json::array();
    for (const auto& s : special_segments(m))
      segs.push_back({{"from", m.at(s.lo)}, {"to", m.at(s.hi)},
                      {"case", std::string(to_string(s.kind))}, {"t", s.t}});
    j["segments"] = segs;
  }
  j["epsilon"] = percolation_time_uig(m);
  j["tau"] = j["epsilon"];
  return j;
}

}  // namespace

CommandResult cmd_analyze(const GraphDocument& doc, const AnalyzeOptions& opt) {
  const Graph& g = doc.graph;
  CommandResult res;
  Json& j = res.output;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  if (!doc.labels.empty()) j["labels"] = doc.labels;

  std::optional<CaterpillarStructure> cat;
  if (g.order() >= 2) cat = recognize_caterpillar(g);
  std::optional<UnitIntervalModel> model;
  if (!cat) model = doc.order ? build_model(g, *doc.order) : recognize_unit_interval(g);
  if (cat) {
    j.update(caterpillar_json(*cat));
  } else if (model) {
    j.update(unit_interval_json(*model));
  } else {
    j["class"] = "other";
    if (!opt.oracle)
      throw DomainError(
          "graph is neither a caterpillar nor a unit interval graph, so no closed "
          "form applies; rerun with --oracle for exhaustive values");
  }

  if (opt.oracle) {
    if (g.order() > opt.harness.max_oracle_n)
      throw ResourceError("graph has " + std::to_string(g.order()) +
                          " vertices, above --max-oracle-n " +
                          std::to_string(opt.harness.max_oracle_n));
    Json o;
    o["g"] = geodetic_number_bruteforce(g, opt.harness.limits);
    o["h"] = hull_number_bruteforce(g, opt.harness.limits);
    o["tau"] = is_connected(g) ? Json(percolation_time_bruteforce(g, opt.harness.limits))
                               : Json(nullptr);
    j["oracle"] = o;
    Json bad = Json::array();
    for (const char* key : {"g", "h", "tau"})
      if (j.contains(key) && j[key] != o[key]) bad.push_back(key);
    j["disagreements"] = bad;
    if (!bad.empty()) res.exit_code = 2;
  }
  return res;
}

std::vector<GraphDocument> cmd_generate(const std::string& kind, int size,
                                        std::uint64_t seed, int count) {
  std::vector<GraphDocument> docs;
  Rng rng(seed);
  if (kind == "caterpillar-exhaustive") {
    if (size < 2 || size > 14) throw InputError("spine length must be in 2..14");
    for (const auto& rds : caterpillar_sequences(size))
      docs.push_back({realize_caterpillar(rds), std::nullopt, {}});
  } else if (kind == "caterpillar-random") {
    if (size < 2) throw InputError("caterpillar needs at least 2 vertices");
    for (int i = 0; i < count; ++i) docs.push_back({random_caterpillar(rng, size), std::nullopt, {}});
  } else if (kind == "uig-random" || kind == "uig-2connected-random") {
    const auto shape = kind == "uig-random" ? UigShape::kConnected : UigShape::kBiconnected;
    if (size < 1) throw InputError("size must be positive");
    for (int i = 0; i < count; ++i) {
      auto og = random_unit_interval(rng, size, shape);
      docs.push_back({std::move(og.graph), std::move(og.order), {}});
    }
  } else if (kind == "all-connected") {
    if (size < 1 || size > 9) throw InputError("all-connected supports 1..9 vertices");
    for (auto& g : connected_graphs(size)) docs.push_back({std::move(g), std::nullopt, {}});
  } else {
    throw InputError("unknown kind '" + kind + "'");
  }
  return docs;
}

Json documents_to_json(const std::vector<GraphDocument>& docs) {
  Json arr = Json::array();
  for (const auto& d : docs) {
    Json j;
    j["n"] = d.graph.order();
    Json edges = Json::array();
    for (auto [u, v] : d.graph.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    if (d.order) j["order"] = *d.order;
    if (!d.labels.empty()) j["labels"] = d.labels;
    arr.push_back(j);
  }
  return arr;
}

namespace {

Json finding_json(const PropertyPFinding& f) {
  Json j;
  j["graph6"] = to_graph6(f.graph);
  j["n"] = f.graph.order();
  j["m"] = f.graph.edge_count();
  j["patterns"] = f.patterns;
  j["by_patterns"] = f.by_patterns;
  j["direct"] = f.direct;
  j["minimal"] = f.minimal;
  Json adj = Json::array();
  for (Vertex v = 0; v < f.graph.order(); ++v)
    adj.push_back(std::vector<Vertex>(f.graph.neighbors(v).begin(), f.graph.neighbors(v).end()));
  j["adjacency"] = adj;
  return j;
}

}  // namespace

CommandResult cmd_propcheck(int max_n, std::uint64_t seed, int samples_per_order) {
  const auto r = crosscheck_property_p(max_n, seed, samples_per_order);
  CommandResult res;
  Json& j = res.output;
  j["max_n"] = max_n;
  j["checked"] = r.checked;
  j["exhaustive_up_to"] = r.exhaustive_up_to;
  j["sampled"] = r.sampled;
  j["forward_violations"] = Json::array();
  for (const auto& f : r.forward_violations) j["forward_violations"].push_back(finding_json(f));
  j["reverse_findings"] = Json::array();
  for (const auto& f : r.reverse_findings) j["reverse_findings"].push_back(finding_json(f));
  res.exit_code = r.agrees() ? 0 : 2;
  return res;
}

Json report_to_json(const ValidationReport& report) {
  Json j;
  const auto s = report.summary();
  j["summary"] = {{"rows", s.rows}, {"agreements", s.agreements},
                  {"disagreements", s.disagreements}, {"skipped", s.skipped}};
  j["warnings"] = report.warnings;
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row;
    row["instance"] = r.instance;
    row["parameter"] = r.parameter;
    row["formula"] = r.formula ? Json(*r.formula) : Json(nullptr);
    row["oracle"] = r.oracle ? Json(*r.oracle) : Json(nullptr);
    row["agree"] = r.agree();
    row["millis"] = r.millis;
    if (!r.note.empty()) row["note"] = r.note;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ' ';
      out += e.is_array() ? "[" + scalar_text(e) + "]" : scalar_text(e);
    }
    return out;
  }
  return v.dump();
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream out;
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items()) out << key << '.' << k2 << ": " << scalar_text(v2) << '\n';
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << key << ":\n";
      for (const auto& e : v) {
        out << " ";
        for (const auto& [k2, v2] : e.items()) out << ' ' << k2 << '=' << scalar_text(v2);
        out << '\n';
      }
    } else {
      out << key << ": " << scalar_text(v) << '\n';
    }
  }
  return out.str();
}

std::string render_report_text(const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& r : report.rows) {
    if (r.agree()) continue;
    out << (r.skipped() ? "SKIP " : "DIFF ") << r.instance << ' ' << r.parameter
        << " formula=" << (r.formula ? std::to_string(*r.formula) : "-")
        << " oracle=" << (r.oracle ? std::to_string(*r.oracle) : "-");
    if (!r.note.empty()) out << " (" << r.note << ')';
    out << '\n';
  }
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  const auto s = report.summary();
  out << "rows: " << s.rows << "\nagreements: " << s.agreements
      << "\ndisagreements: " << s.disagreements << "\nskipped: " << s.skipped << '\n';
  return out.str();
}

std::string render_propcheck_text(const Json& j) {
  std::ostringstream out;
  out << "checked: " << j["checked"] << "\nexhaustive_up_to: " << j["exhaustive_up_to"]
      << "\nsampled: " << j["sampled"] << '\n';
  for (const char* list : {"forward_violations", "reverse_findings"}) {
    out << list << ": " << j[list].size() << '\n';
    for (const auto& f : j[list]) {
      out << "  graph6 " << f["graph6"].get<std::string>() << " n=" << f["n"] << " m=" << f["m"]
          << " minimal=" << f["minimal"] << " patterns=[" << scalar_text(f["patterns"]) << "]\n";
      for (std::size_t v = 0; v < f["adjacency"].size(); ++v)
        out << "    " << v << ": " << scalar_text(f["adjacency"][v]) << '\n';
    }
  }
  return out.str();
}

}  // namespace p3
