#include "p3/caterpillar.hpp"

#include <algorithm>
#include <string>

#include "p3/errors.hpp"

namespace p3 {

CaterpillarStructure CaterpillarStructure::reversed() const {
  CaterpillarStructure out = *this;
  std::reverse(out.spine.begin(), out.spine.end());
  std::reverse(out.rds.begin(), out.rds.end());
  return out;
}

namespace {

Vertex lowest_leaf_neighbor(const Graph& g, Vertex v, Vertex skip = -1) {
  for (Vertex w : g.neighbors(v))
    if (w != skip && degree(g, w) == 1) return w;
  return -1;
}

}  // namespace

std::optional<CaterpillarStructure> recognize_caterpillar(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw InputError("caterpillars have at least two vertices");
  if (g.edge_count() != static_cast<std::size_t>(n - 1) || !is_connected(g))
    return std::nullopt;

  CaterpillarStructure cs;
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < n; ++v)
    (degree(g, v) == 1 ? cs.leaves : inner).push_back(v);

  if (inner.empty()) {
    cs.spine = {0, 1};
  } else if (inner.size() == 1) {
    const Vertex c = inner.front();
    const Vertex first = lowest_leaf_neighbor(g, c);
    cs.spine = {first, c, lowest_leaf_neighbor(g, c, first)};
  } else {
    // The non-leaf vertices induce a tree; it must be a path.
    auto inner_degree = [&](Vertex v) {
      int d = 0;
      for (Vertex w : g.neighbors(v))
        if (degree(g, w) > 1) ++d;
      return d;
    };
    Vertex start = -1;
    for (Vertex v : inner) {
      const int d = inner_degree(v);
      if (d > 2) return std::nullopt;
      if (d == 1 && start == -1) start = v;
    }
    cs.spine.push_back(lowest_leaf_neighbor(g, start));
    Vertex prev = -1, cur = start;
    while (cur != -1) {
      cs.spine.push_back(cur);
      Vertex next = -1;
      for (Vertex w : g.neighbors(cur))
        if (w != prev && degree(g, w) > 1) next = w;
      prev = cur;
      cur = next;
    }
    cs.spine.push_back(lowest_leaf_neighbor(g, prev));
  }
  for (Vertex v : cs.spine) cs.rds.push_back(std::min(degree(g, v), 4));
  return cs;
}

Graph realize_caterpillar(std::span<const int> rds,
                          std::span<const int> extra_leaves) {
  const int k = static_cast<int>(rds.size());
  if (k < 2 || rds.front() != 1 || rds.back() != 1)
    throw InputError("reduced degree sequence must start and end with 1");
  if (!extra_leaves.empty() && static_cast<int>(extra_leaves.size()) != k)
    throw InputError("extra_leaves must match the sequence length");
  if (k == 2) return path_graph(2);
  std::vector<Edge> edges;
  int next = k;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  for (int i = 1; i + 1 < k; ++i) {
    const int d = rds[i];
    if (d < 2 || d > 4)
      throw InputError("interior spine degree must be 2, 3 or 4");
    int pendants = d - 2;
    if (d == 4 && !extra_leaves.empty()) pendants += extra_leaves[i];
    for (int j = 0; j < pendants; ++j) edges.emplace_back(i, next++);
  }
  return Graph::from_edges(next, edges);
}

bool is_basic_sequence(std::span<const int> seq) {
  const std::size_t len = seq.size();
  if (len == 0) return false;
  if (len == 1) return seq[0] == 1;
  if (seq[0] == 2) return len == 2 && seq[1] >= 1 && seq[1] <= 4;
  if (seq[0] != 3 && seq[0] != 4) return false;
  // x gamma tail, gamma all 4s, tail one of 1, 2, 31, 32, 33, 34.
  std::size_t j = 1;
  while (j < len && seq[j] == 4) ++j;
  const std::size_t tail = len - j;
  if (tail == 1) return seq[j] == 1 || seq[j] == 2;
  if (tail == 2) return seq[j] == 3 && seq[j + 1] >= 1 && seq[j + 1] <= 4;
  return false;
}

std::vector<BasicSequence> factor_basic(std::span<const int> sigma) {
  for (int term : sigma)
    if (term < 1 || term > 4)
      throw MalformedSequence("sequence terms must lie in {1,2,3,4}");
  if (sigma.empty() || sigma.back() != 1)
    throw MalformedSequence("sequence must end with 1");

  std::vector<BasicSequence> out;
  std::size_t pos = 0;
  const std::size_t len = sigma.size();
  auto take = [&](std::size_t count) {
    if (pos + count > len)
      throw MalformedSequence("sequence ends inside a basic sequence at term " +
                              std::to_string(pos + 1));
    out.emplace_back(sigma.begin() + pos, sigma.begin() + pos + count);
    pos += count;
  };
  while (pos < len) {
    const int first = sigma[pos];
    if (first == 1) {
      take(1);
    } else if (first == 2) {
      take(2);
    } else {
      std::size_t j = pos + 1;
      while (j < len && sigma[j] == 4) ++j;
      if (j == len)
        throw MalformedSequence("run of 4s reaches the end of the sequence");
      take(sigma[j] == 3 ? j - pos + 2 : j - pos + 1);
    }
  }
  return out;
}

std::vector<BasicSequence> BasicDecomposition::pieces() const {
  std::vector<BasicSequence> out{{1}};
  out.insert(out.end(), factors.begin(), factors.end());
  return out;
}

BasicDecomposition decompose(std::span<const int> rds) {
  if (rds.size() < 2 || rds.front() != 1 || rds.back() != 1)
    throw MalformedSequence(
        "reduced degree sequence needs at least two terms, first and last 1");
  return BasicDecomposition{factor_basic(rds.subspan(1))};
}

int two_run_measure(std::span<const int> seq) {
  int total = 0, run = 0;
  for (int term : seq) {
    if (term == 2) {
      ++run;
    } else {
      total += run / 2;
      run = 0;
    }
  }
  return total + run / 2;
}

std::vector<int> drop_threes(std::span<const int> rds) {
  std::vector<int> out;
  for (int term : rds)
    if (term != 3) out.push_back(term);
  return out;
}

int geodetic_number(std::span<const int> rds, int leaf_count) {
  return decompose(rds).p() + leaf_count - 1;
}

int hull_number(std::span<const int> rds, int leaf_count) {
  return leaf_count + two_run_measure(drop_threes(rds));
}

int geodetic_number(const CaterpillarStructure& cs) {
  return geodetic_number(cs.rds, cs.leaf_count());
}

int hull_number(const CaterpillarStructure& cs) {
  return hull_number(cs.rds, cs.leaf_count());
}

namespace {

void check_caterpillar_sequence(std::span<const int> rds) {
  const std::size_t k = rds.size();
  if (k < 2 || rds.front() != 1 || rds.back() != 1)
    throw MalformedSequence("reduced degree sequence must start and end with 1");
  for (std::size_t i = 1; i + 1 < k; ++i)
    if (rds[i] < 2 || rds[i] > 4)
      throw MalformedSequence("interior reduced degrees must be 2, 3 or 4");
}

bool low(int d) { return d == 1 || d == 2; }

// Worst-case round for position i inside the run of 3s [first, last],
// given the reduced degrees just outside the run.
int run_value(int i, int first, int last, int left, int right,
              FlankedRunRule rule) {
  const int to_left = i - first;
  const int to_right = last - i;
  if (left == 2 && right == 2) {
    return rule == FlankedRunRule::kFarthestEnd
               ? std::max(to_left, to_right) + 1
               : std::min(to_left, to_right) + 1;
  }
  if (left == 1 && right == 1) return std::min(to_left, to_right) + 1;
  if (left == 1 && right == 2) return to_left + 1;
  if (left == 2 && right == 1) return to_right + 1;
  if (left == 1 && right == 4) return std::min(to_left + 1, to_right + 2);
  if (left == 4 && right == 1) return std::min(to_left + 2, to_right + 1);
  if (left == 4 && right == 2) return to_left + 2;
  if (left == 2 && right == 4) return to_right + 2;
  if (left == 4 && right == 4) return std::min(to_left, to_right) + 2;
  throw ConsistencyError("run of 3s flanked by degrees " +
                         std::to_string(left) + "," + std::to_string(right));
}

}  // namespace

PercolationSequence percolation_sequence(std::span<const int> rds,
                                         FlankedRunRule rule) {
  check_caterpillar_sequence(rds);
  const int k = static_cast<int>(rds.size());
  PercolationSequence ps;
  ps.ell.resize(k);
  ps.run_first.resize(k);
  ps.run_last.resize(k);
  ps.f.assign(k, 0);

  ps.ell[0] = 1;
  for (int i = 1; i < k; ++i)
    ps.ell[i] = (rds[i] == 3 && rds[i - 1] == 3) ? ps.ell[i - 1] : ps.ell[i - 1] + 1;
  for (int i = 0; i < k; ++i) {
    int a = i, b = i;
    while (a > 0 && ps.ell[a - 1] == ps.ell[i]) --a;
    while (b + 1 < k && ps.ell[b + 1] == ps.ell[i]) ++b;
    ps.run_first[i] = a;
    ps.run_last[i] = b;
  }

  // Degree-2 positions read their neighbors' values, which are never
  // degree 2 themselves when the lookup happens, so fill those last.
  for (int i = 0; i < k; ++i) {
    switch (rds[i]) {
      case 1: ps.f[i] = 0; break;
      case 4: ps.f[i] = 1; break;
      case 3:
        ps.f[i] = run_value(i, ps.run_first[i], ps.run_last[i],
                            rds[ps.run_first[i] - 1], rds[ps.run_last[i] + 1],
                            rule);
        break;
      default: break;
    }
  }
  for (int i = 1; i + 1 < k; ++i) {
    if (rds[i] != 2) continue;
    const bool left_low = low(rds[i - 1]);
    const bool right_low = low(rds[i + 1]);
    if (left_low && right_low)
      ps.f[i] = 1;
    else if (left_low)
      ps.f[i] = ps.f[i + 1] + 1;
    else if (right_low)
      ps.f[i] = ps.f[i - 1] + 1;
    else
      ps.f[i] = std::max(ps.f[i - 1], ps.f[i + 1]) + 1;
  }
  ps.F = *std::max_element(ps.f.begin(), ps.f.end());
  return ps;
}

PercolationSequence percolation_sequence(const CaterpillarStructure& cs) {
  return percolation_sequence(cs.rds);
}

int percolation_time(const CaterpillarStructure& cs) {
  return percolation_sequence(cs).F;
}

}  // namespace p3
