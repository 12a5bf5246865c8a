#include "p3/percolation.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "p3/errors.hpp"

namespace p3 {

namespace {

std::vector<bool> membership(const Graph& g, std::span<const Vertex> s) {
  std::vector<bool> in(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : s) {
    g.neighbors(v);
    in[v] = true;
  }
  return in;
}

VertexSet members(const std::vector<bool>& in) {
  VertexSet out;
  for (std::size_t v = 0; v < in.size(); ++v)
    if (in[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

// Vertices added to `in` by one round.
std::vector<Vertex> newly_infected(const Graph& g, const std::vector<bool>& in) {
  std::vector<Vertex> fresh;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    int hits = 0;
    for (Vertex w : g.neighbors(v))
      if (in[w] && ++hits == 2) break;
    if (hits >= 2) fresh.push_back(v);
  }
  return fresh;
}

}  // namespace

VertexSet interval(const Graph& g, std::span<const Vertex> s) {
  auto in = membership(g, s);
  for (Vertex v : newly_infected(g, in)) in[v] = true;
  return members(in);
}

PercolationTrace percolate(const Graph& g, std::span<const Vertex> s) {
  PercolationTrace trace;
  auto in = membership(g, s);
  trace.time_of.assign(static_cast<std::size_t>(g.order()), std::nullopt);
  for (Vertex v = 0; v < g.order(); ++v)
    if (in[v]) trace.time_of[v] = 0;
  trace.rounds.push_back(members(in));
  for (int round = 1;; ++round) {
    auto fresh = newly_infected(g, in);
    if (fresh.empty()) break;
    for (Vertex v : fresh) {
      in[v] = true;
      trace.time_of[v] = round;
    }
    trace.rounds.push_back(members(in));
  }
  trace.percolated =
      static_cast<int>(trace.rounds.back().size()) == g.order();
  return trace;
}

VertexSet hull_closure(const Graph& g, std::span<const Vertex> s) {
  return percolate(g, s).rounds.back();
}

namespace bits {

MaskGraph::MaskGraph(const Graph& g) : n(g.order()), nbr(g.order(), 0) {
  if (n > 64)
    throw ResourceError("bitmask oracle supports at most 64 vertices, got " +
                        std::to_string(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nbr[v] |= Mask{1} << w;
  all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

Mask interval(const MaskGraph& g, Mask s) {
  Mask once = 0, twice = 0;
  for (Mask m = s; m; m &= m - 1) {
    const Mask nb = g.nbr[std::countr_zero(m)];
    twice |= once & nb;
    once |= nb;
  }
  return s | twice;
}

Mask closure(const MaskGraph& g, Mask s) {
  for (;;) {
    Mask next = interval(g, s);
    if (next == s) return s;
    s = next;
  }
}

std::optional<int> percolation_time(const MaskGraph& g, Mask s) {
  int t = 0;
  while (s != g.all) {
    Mask next = interval(g, s);
    if (next == s) return std::nullopt;
    s = next;
    ++t;
  }
  return t;
}

Mask to_mask(std::span<const Vertex> s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

VertexSet from_mask(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace bits

namespace {

using bits::Mask;
using bits::MaskGraph;

// Vertices of degree < 2 belong to every hull, geodetic and percolating
// set; everything else is a free choice for the exhaustive search.
struct SearchSpace {
  Mask forced = 0;
  std::vector<Vertex> free;

  SearchSpace(const Graph& g, int cap, const char* what) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (degree(g, v) < 2)
        forced |= Mask{1} << v;
      else
        free.push_back(v);
    }
    if (static_cast<int>(free.size()) > cap)
      throw ResourceError(std::string(what) + ": " +
                          std::to_string(free.size()) +
                          " free vertices exceed the cap of " +
                          std::to_string(cap));
  }

  Mask expand(std::uint64_t pick) const {
    Mask s = forced;
    for (; pick; pick &= pick - 1) s |= Mask{1} << free[std::countr_zero(pick)];
    return s;
  }

  std::uint64_t combos() const { return std::uint64_t{1} << free.size(); }
};

// Visits picks over the free vertices in ascending popcount, and in
// increasing numeric order within a popcount. Stops when visit returns true
// and reports the popcount at which it stopped.
template <typename Visit>
std::optional<int> ascending_search(const SearchSpace& space, Visit visit) {
  const int f = static_cast<int>(space.free.size());
  for (int k = 0; k <= f; ++k) {
    if (k == 0) {
      if (visit(space.expand(0))) return 0;
      continue;
    }
    std::uint64_t pick = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << f;
    while (pick < limit) {
      if (visit(space.expand(pick))) return k;
      // Gosper's hack: next integer with the same popcount.
      const std::uint64_t c = pick & (~pick + 1);
      const std::uint64_t r = pick + c;
      pick = (((r ^ pick) >> 2) / c) | r;
    }
  }
  return std::nullopt;
}

void require_limit(const Graph& g) {
  if (g.order() > 64)
    throw ResourceError("oracle supports at most 64 vertices");
}

}  // namespace

VertexSet minimum_hull_set(const Graph& g, const OracleLimits& limits) {
  require_limit(g);
  MaskGraph mg(g);
  SearchSpace space(g, limits.max_hull_free, "hull number oracle");
  Mask found = mg.all;
  ascending_search(space, [&](Mask s) {
    if (bits::closure(mg, s) != mg.all) return false;
    found = s;
    return true;
  });
  return bits::from_mask(found);
}

int hull_number_bruteforce(const Graph& g, const OracleLimits& limits) {
  return static_cast<int>(minimum_hull_set(g, limits).size());
}

std::vector<VertexSet> all_minimum_hull_sets(const Graph& g,
                                             const OracleLimits& limits) {
  const int h = hull_number_bruteforce(g, limits);
  MaskGraph mg(g);
  SearchSpace space(g, limits.max_hull_free, "hull number oracle");
  std::vector<VertexSet> out;
  for (std::uint64_t pick = 0; pick < space.combos(); ++pick) {
    const Mask s = space.expand(pick);
    if (std::popcount(s) == h && bits::closure(mg, s) == mg.all)
      out.push_back(bits::from_mask(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int geodetic_number_bruteforce(const Graph& g, const OracleLimits& limits) {
  require_limit(g);
  MaskGraph mg(g);
  SearchSpace space(g, limits.max_hull_free, "geodetic number oracle");
  int best = g.order();
  ascending_search(space, [&](Mask s) {
    if (bits::interval(mg, s) != mg.all) return false;
    best = std::popcount(s);
    return true;
  });
  return best;
}

int percolation_time_bruteforce(const Graph& g, const OracleLimits& limits) {
  require_limit(g);
  MaskGraph mg(g);
  SearchSpace space(g, limits.max_time_free, "percolation time oracle");
  int best = 0;
  for (std::uint64_t pick = 0; pick < space.combos(); ++pick)
    if (auto t = bits::percolation_time(mg, space.expand(pick)))
      best = std::max(best, *t);
  return best;
}

int vertex_percolation_time_bruteforce(const Graph& g, Vertex v,
                                       const OracleLimits& limits) {
  require_limit(g);
  g.neighbors(v);
  MaskGraph mg(g);
  SearchSpace space(g, limits.max_time_free, "vertex percolation time oracle");
  const Mask target = Mask{1} << v;
  int best = 0;
  for (std::uint64_t pick = 0; pick < space.combos(); ++pick) {
    Mask s = space.expand(pick);
    int when = -1;
    for (int t = 0;; ++t) {
      if (when < 0 && (s & target)) when = t;
      Mask next = bits::interval(mg, s);
      if (next == s) break;
      s = next;
    }
    if (s == mg.all) best = std::max(best, when);
  }
  return best;
}

bool property_p_bruteforce(const Graph& g, const OracleLimits& limits) {
  if (g.order() > limits.max_property_n)
    throw ResourceError("property P oracle: " + std::to_string(g.order()) +
                        " vertices exceed the cap of " +
                        std::to_string(limits.max_property_n));
  MaskGraph mg(g);
  for (Mask s = 0; s <= mg.all; ++s) {
    const Mask once = bits::interval(mg, s);
    if (bits::interval(mg, once) != once) return false;
    if (s == mg.all) break;
  }
  return true;
}

}  // namespace p3
