#include "p3/unit_interval.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "p3/errors.hpp"

namespace p3 {

int UnitIntervalModel::degree_at(int pos) const {
  return degree(graph_, order_[pos]);
}

UnitIntervalModel build_model(const Graph& g, std::vector<Vertex> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n)
    throw InputError("order has " + std::to_string(order.size()) +
                     " entries for a graph on " + std::to_string(n) +
                     " vertices");
  UnitIntervalModel m;
  m.position_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    const Vertex v = order[p];
    if (v < 0 || v >= n || m.position_[v] != -1)
      throw InputError("order is not a permutation of the vertex set");
    m.position_[v] = p;
  }
  m.reach_left_.resize(n);
  m.reach_right_.resize(n);
  for (int p = 0; p < n; ++p) {
    int lo = p, hi = p;
    for (Vertex w : g.neighbors(order[p])) {
      lo = std::min(lo, m.position_[w]);
      hi = std::max(hi, m.position_[w]);
    }
    if (hi - lo != degree(g, order[p]))
      throw NotUnitInterval("closed neighborhood of vertex " +
                            std::to_string(order[p]) +
                            " is not consecutive in the order");
    m.reach_left_[p] = lo;
    m.reach_right_[p] = hi;
  }
  for (int p = 0; p < n; ++p)
    if (p == 0 || m.reach_right_[p - 1] < m.reach_right_[p])
      m.cliques_.push_back({p, m.reach_right_[p]});
  m.graph_ = g;
  m.order_ = std::move(order);
  return m;
}

UnitIntervalModel model_from_cliques(int n, std::span<const CliqueInterval> cliques) {
  Graph g(n);
  for (const auto& c : cliques) {
    if (c.lo < 0 || c.hi >= n || c.lo > c.hi)
      throw InputError("clique interval outside 0.." + std::to_string(n - 1));
    for (int u = c.lo; u <= c.hi; ++u)
      for (int w = u + 1; w <= c.hi; ++w)
        if (!g.adjacent(u, w)) g.add_edge(u, w);
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  return build_model(g, std::move(order));
}

UnitIntervalModel submodel(const UnitIntervalModel& m, int lo, int hi) {
  if (lo < 0 || hi >= m.size() || lo > hi)
    throw InputError("submodel range outside the model");
  std::vector<Vertex> vs(m.order().begin() + lo, m.order().begin() + hi + 1);
  Graph h = induced_subgraph(m.graph(), vs);
  std::vector<Vertex> order(vs.size());
  std::iota(order.begin(), order.end(), 0);
  return build_model(h, std::move(order));
}

namespace {

// Backtracking search for an order of one connected component.
class OrderSearch {
 public:
  OrderSearch(const Graph& g, std::vector<Vertex> component)
      : g_(g), comp_(std::move(component)), placed_at_(g.order(), -1),
        unplaced_nbrs_(g.order(), 0) {
    for (Vertex v : comp_) unplaced_nbrs_[v] = degree(g_, v);
  }

  std::optional<std::vector<Vertex>> run() {
    std::vector<Vertex> starts = comp_;
    std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) {
      return degree(g_, a) < degree(g_, b);
    });
    for (Vertex s : distinct_twins(starts)) {
      place(s);
      if (extend()) return order_;
      unplace(s);
    }
    return std::nullopt;
  }

 private:
  static constexpr long kNodeBudget = 5'000'000;

  std::vector<Vertex> closed_nbhd(Vertex v) const {
    std::vector<Vertex> out(g_.neighbors(v).begin(), g_.neighbors(v).end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

  std::vector<Vertex> distinct_twins(const std::vector<Vertex>& cands) const {
    std::vector<Vertex> out;
    std::vector<std::vector<Vertex>> seen;
    for (Vertex v : cands) {
      auto nb = closed_nbhd(v);
      if (std::find(seen.begin(), seen.end(), nb) != seen.end()) continue;
      seen.push_back(std::move(nb));
      out.push_back(v);
    }
    return out;
  }

  bool can_place(Vertex w) const {
    const int p = static_cast<int>(order_.size());
    int first = p;
    for (Vertex x : g_.neighbors(w))
      if (placed_at_[x] >= 0) first = std::min(first, placed_at_[x]);
    // Placed neighbors of w form a suffix of the current order.
    int count = 0;
    for (Vertex x : g_.neighbors(w))
      if (placed_at_[x] >= 0) ++count;
    if (count != p - first) return false;
    // Every placed vertex that still waits for a neighbor must see w.
    for (Vertex u : open_)
      if (!g_.adjacent(u, w)) return false;
    return true;
  }

  void place(Vertex w) {
    placed_at_[w] = static_cast<int>(order_.size());
    order_.push_back(w);
    for (Vertex x : g_.neighbors(w)) --unplaced_nbrs_[x];
    rebuild_open();
  }

  void unplace(Vertex w) {
    order_.pop_back();
    placed_at_[w] = -1;
    for (Vertex x : g_.neighbors(w)) ++unplaced_nbrs_[x];
    rebuild_open();
  }

  void rebuild_open() {
    open_.clear();
    for (Vertex u : order_)
      if (unplaced_nbrs_[u] > 0) open_.push_back(u);
  }

  bool extend() {
    if (++nodes_ > kNodeBudget)
      throw ResourceError("unit interval recognition exceeded its search budget");
    if (order_.size() == comp_.size()) return true;
    std::vector<Vertex> cands;
    for (Vertex w : g_.neighbors(order_.back()))
      if (placed_at_[w] < 0 && can_place(w)) cands.push_back(w);
    for (Vertex w : distinct_twins(cands)) {
      place(w);
      if (extend()) return true;
      unplace(w);
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> comp_;
  std::vector<int> placed_at_;
  std::vector<int> unplaced_nbrs_;
  std::vector<Vertex> order_;
  std::vector<Vertex> open_;
  long nodes_ = 0;
};

}  // namespace

std::optional<UnitIntervalModel> recognize_unit_interval(const Graph& g) {
  std::vector<Vertex> order;
  for (auto& comp : connected_components(g)) {
    auto part = OrderSearch(g, comp).run();
    if (!part) return std::nullopt;
    order.insert(order.end(), part->begin(), part->end());
  }
  return build_model(g, std::move(order));
}

int diameter_endpoints(const UnitIntervalModel& m) {
  if (!is_connected(m.graph()))
    throw DomainError("diameter of a disconnected model");
  int steps = 0;
  for (int p = 0; p + 1 < m.size(); p = m.rightmost_neighbor(p)) ++steps;
  return steps;
}

std::vector<int> singular_positions(const UnitIntervalModel& m) {
  std::vector<int> out;
  const auto cliques = m.cliques();
  for (int p = 0; p < m.size(); ++p) {
    const bool ends_here = std::any_of(cliques.begin(), cliques.end(),
                                       [&](const auto& c) { return c.hi == p && c.lo < p; });
    const bool starts_here = std::any_of(cliques.begin(), cliques.end(),
                                         [&](const auto& c) { return c.lo == p && c.hi > p; });
    if (ends_here && starts_here) out.push_back(p);
  }
  return out;
}

namespace {

void require_biconnected(const UnitIntervalModel& m, const char* what) {
  if (!is_biconnected(m.graph()))
    throw DomainError(std::string(what) +
                      " needs a 2-connected model with at least 3 vertices");
}

}  // namespace

StarExpansion star_expansion(const UnitIntervalModel& m) {
  require_biconnected(m, "star_transform");
  std::vector<CliqueInterval> cliques(m.cliques().begin(), m.cliques().end());
  std::vector<int> map(m.size());
  std::iota(map.begin(), map.end(), 0);
  std::vector<int> singular;
  int n = m.size();
  // Scan positions of the growing model; `origin` tracks which input
  // position the scan is looking at.
  int origin = 0;
  for (int h = 0; h < n; ++h, ++origin) {
    const bool ends_here = std::any_of(cliques.begin(), cliques.end(),
                                       [&](const auto& c) { return c.hi == h && c.lo < h; });
    const bool starts_here = std::any_of(cliques.begin(), cliques.end(),
                                         [&](const auto& c) { return c.lo == h && c.hi > h; });
    if (!(ends_here && starts_here)) continue;
    singular.push_back(origin);
    for (auto& c : cliques) {
      if (c.hi <= h) continue;
      if (c.lo < h) {
        c.hi += 1;
      } else {
        c.lo += 1;
        c.hi += 1;
      }
    }
    for (int& p : map)
      if (p > h) ++p;
    ++n;
    ++h;  // the inserted position is never singular
  }
  StarExpansion out{model_from_cliques(n, cliques), std::move(singular), std::move(map)};
  const auto cs = out.model.cliques();
  if (cs.size() != m.cliques().size())
    throw ConsistencyError("star_transform changed the number of maximal cliques");
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const int overlap = std::min(cs[i].hi, cs[j].hi) - std::max(cs[i].lo, cs[j].lo) + 1;
      if (overlap == 1)
        throw ConsistencyError("star_transform left two cliques sharing one vertex");
    }
  return out;
}

UnitIntervalModel star_transform(const UnitIntervalModel& m) {
  return star_expansion(m).model;
}

int percolation_time_2connected(const UnitIntervalModel& m) {
  require_biconnected(m, "percolation_time_2connected");
  return diameter_endpoints(star_transform(m));
}

std::vector<CliqueInterval> block_intervals(const UnitIntervalModel& m) {
  if (!is_connected(m.graph()))
    throw DomainError("blocks of a disconnected model");
  std::vector<CliqueInterval> out;
  for (const auto& block : blocks(m.graph()).blocks) {
    int lo = m.size(), hi = -1;
    for (Vertex v : block) {
      lo = std::min(lo, m.position(v));
      hi = std::max(hi, m.position(v));
    }
    if (hi - lo + 1 != static_cast<int>(block.size()))
      throw ConsistencyError("block is not a position interval");
    out.push_back({lo, hi});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return out;
}

int block_expansion_diameter_sum(const UnitIntervalModel& m) {
  int total = 0;
  for (const auto& b : block_intervals(m)) {
    if (b.size() == 1) continue;
    if (b.size() == 2) {
      total += 1;
      continue;
    }
    total += diameter_endpoints(star_transform(submodel(m, b.lo, b.hi)));
  }
  return total;
}

std::string_view to_string(SegmentCase c) {
  switch (c) {
    case SegmentCase::kEdge: return "edge";
    case SegmentCase::kWhole: return "whole";
    case SegmentCase::kTrimLeft: return "trim-left+1";
    case SegmentCase::kTrimRight: return "trim-right+1";
    case SegmentCase::kTrimBothPendant: return "trim-both+1";
    case SegmentCase::kTrimBothInterior: return "trim-both+2";
  }
  return "?";
}

namespace {

void require_connected_3(const UnitIntervalModel& m, const char* what) {
  if (m.size() < 3) throw DomainError(std::string(what) + " needs at least 3 vertices");
  if (!is_connected(m.graph()))
    throw DomainError(std::string(what) + " needs a connected model");
}

bool has_degree2_cut_or_pendant(const UnitIntervalModel& m) {
  for (int p = 0; p < m.size(); ++p)
    if (m.degree_at(p) == 1) return true;
  for (Vertex v : blocks(m.graph()).cut_vertices)
    if (degree(m.graph(), v) == 2) return true;
  return false;
}

// Time of the positions lo..hi left after trimming a segment, through the
// same dispatch. Consecutive positions of a connected model stay connected.
int trimmed_time(const UnitIntervalModel& m, int lo, int hi) {
  if (lo > hi) return 0;
  return percolation_time_uig(submodel(m, lo, hi));
}

}  // namespace

std::vector<SpecialSegment> special_segments(const UnitIntervalModel& m) {
  require_connected_3(m, "special_segments");
  const int n = m.size();
  std::vector<int> bounds{0};
  for (Vertex v : blocks(m.graph()).cut_vertices)
    if (degree(m.graph(), v) == 2) bounds.push_back(m.position(v));
  bounds.push_back(n - 1);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  const int first_deg = m.degree_at(0);
  const int last_deg = m.degree_at(n - 1);
  std::vector<SpecialSegment> out;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    SpecialSegment s{bounds[i], bounds[i + 1], SegmentCase::kEdge, 1};
    if (s.hi - s.lo + 1 == 2) {
      out.push_back(s);
      continue;
    }
    const bool at_first = s.lo == 0;
    const bool at_last = s.hi == n - 1;
    std::vector<SegmentCase> hits;
    if (at_first && at_last && first_deg >= 2 && last_deg >= 2)
      hits.push_back(SegmentCase::kWhole);
    if (((at_first && first_deg == 1) || !at_first) && at_last && last_deg >= 2)
      hits.push_back(SegmentCase::kTrimLeft);
    if (at_first && first_deg >= 2 && ((last_deg == 1 && at_last) || !at_last))
      hits.push_back(SegmentCase::kTrimRight);
    if (at_first && at_last && first_deg == 1 && last_deg == 1)
      hits.push_back(SegmentCase::kTrimBothPendant);
    if ((!at_first && at_last && last_deg == 1) ||
        (at_first && !at_last && first_deg == 1) || (!at_first && !at_last))
      hits.push_back(SegmentCase::kTrimBothInterior);
    if (hits.size() != 1)
      throw ConsistencyError("special segment [" + std::to_string(s.lo) + "," +
                             std::to_string(s.hi) + "] matches " +
                             std::to_string(hits.size()) + " cases");
    s.kind = hits.front();
    switch (s.kind) {
      case SegmentCase::kWhole: s.t = trimmed_time(m, s.lo, s.hi); break;
      case SegmentCase::kTrimLeft: s.t = trimmed_time(m, s.lo + 1, s.hi) + 1; break;
      case SegmentCase::kTrimRight: s.t = trimmed_time(m, s.lo, s.hi - 1) + 1; break;
      case SegmentCase::kTrimBothPendant:
        s.t = trimmed_time(m, s.lo + 1, s.hi - 1) + 1;
        break;
      case SegmentCase::kTrimBothInterior:
        s.t = trimmed_time(m, s.lo + 1, s.hi - 1) + 2;
        break;
      case SegmentCase::kEdge: break;
    }
    out.push_back(s);
  }
  return out;
}

int percolation_time_uig(const UnitIntervalModel& m) {
  if (!is_connected(m.graph()))
    throw DomainError("percolation_time_uig needs a connected model");
  if (m.size() < 3) return 0;
  if (!has_degree2_cut_or_pendant(m)) return block_expansion_diameter_sum(m);
  int best = 0;
  for (const auto& s : special_segments(m)) best = std::max(best, s.t);
  return best;
}

}  // namespace p3
