#include "edgereg/vwc.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "edgereg/errors.hpp"

namespace edgereg {

std::vector<std::string> VwcLabeling::cover() const {
  std::vector<std::string> out;
  for (const auto& [x, y] : pairs) out.push_back(x);
  return out;
}

std::vector<std::string> VwcLabeling::independent() const {
  std::vector<std::string> out;
  for (const auto& [x, y] : pairs) out.push_back(y);
  return out;
}

void validate_labeling(const Graph& g, const VwcLabeling& l) {
  int h = l.h();
  if (2 * h != g.vertex_count())
    throw InvalidLabeling("labeling has " + std::to_string(h) + " pairs but graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
  uint64_t xmask = 0, ymask = 0;
  for (const auto& [x, y] : l.pairs) {
    int xi = g.index_of(x), yi = g.index_of(y);
    if (!g.has_edge(xi, yi))
      throw InvalidLabeling("pair {" + x + "," + y + "} is not an edge");
    uint64_t xb = uint64_t{1} << xi, yb = uint64_t{1} << yi;
    if ((xmask | ymask) & (xb | yb))
      throw InvalidLabeling("vertex used twice in labeling");
    xmask |= xb;
    ymask |= yb;
  }
  if ((xmask | ymask) != g.vertex_mask())
    throw InvalidLabeling("labeling does not use every vertex");
  if (!is_minimal_vertex_cover(g, xmask))
    throw InvalidLabeling("x side is not a minimal vertex cover");
  // y side maximal independent <=> independent and complement is a cover
  uint64_t rest = ymask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (g.neighbors(v) & ymask)
      throw InvalidLabeling("y side is not independent");
  }
  rest = xmask;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (!(g.neighbors(v) & ~xmask))
      throw InvalidLabeling("y side is not maximal independent");
  }
}

bool is_well_covered(const Graph& g) {
  int size = -1;
  bool covered = true;
  for_each_maximal_independent_set(g, [&](uint64_t s) {
    int k = std::popcount(s);
    if (size < 0) {
      size = k;
      return true;
    }
    if (k != size) {
      covered = false;
      return false;
    }
    return true;
  });
  return covered;
}

bool is_very_well_covered(const Graph& g) {
  int n = g.vertex_count();
  if (n < 2 || n % 2 != 0) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) return false;
  int size = -1;
  bool covered = true;
  for_each_maximal_independent_set(g, [&](uint64_t s) {
    int k = std::popcount(s);
    if (size < 0) {
      size = k;
      return true;
    }
    if (k != size) {
      covered = false;
      return false;
    }
    return true;
  });
  return covered && size == n / 2;
}

namespace {

// Bipartite matching (x side -> y side) via augmenting paths.
struct Matcher {
  const std::vector<uint64_t>& adj;  // adj[xi] = mask of compatible y positions
  int h;
  std::vector<int> match_y;  // y position -> x position or -1

  Matcher(const std::vector<uint64_t>& a, int hh) : adj(a), h(hh), match_y(static_cast<size_t>(hh), -1) {}

  bool augment(int x, uint64_t& visited) {
    for (int y = 0; y < h; ++y) {
      if (!((adj[static_cast<size_t>(x)] >> y) & 1)) continue;
      if ((visited >> y) & 1) continue;
      visited |= uint64_t{1} << y;
      if (match_y[static_cast<size_t>(y)] < 0 || augment(match_y[static_cast<size_t>(y)], visited)) {
        match_y[static_cast<size_t>(y)] = x;
        return true;
      }
    }
    return false;
  }

  // max matching size restricted to x positions in xs
  int solve(const std::vector<int>& xs) {
    std::fill(match_y.begin(), match_y.end(), -1);
    int size = 0;
    for (int x : xs) {
      uint64_t visited = 0;
      if (augment(x, visited)) ++size;
    }
    return size;
  }
};

}  // namespace

VwcLabeling vwc_labeling(const Graph& g) {
  if (!is_very_well_covered(g))
    throw NotVeryWellCovered("graph is not very well-covered: " + graph_digest(g));
  int n = g.vertex_count();
  int h = n / 2;

  // candidate covers = complements of maximal independent sets
  std::vector<uint64_t> covers;
  for_each_maximal_independent_set(g, [&](uint64_t s) {
    covers.push_back(g.vertex_mask() & ~s);
    return true;
  });

  // order by sorted name list
  auto names_of = [&](uint64_t mask) {
    std::vector<std::string> out;
    uint64_t rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      out.push_back(g.name(v));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::sort(covers.begin(), covers.end(), [&](uint64_t a, uint64_t b) {
    return names_of(a) < names_of(b);
  });
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());

  for (uint64_t cover : covers) {
    std::vector<int> xs, ys;
    for (int v = 0; v < n; ++v) {
      if ((cover >> v) & 1)
        xs.push_back(v);
      else
        ys.push_back(v);
    }
    // sort both sides by name; x positions run in sorted-name order
    auto by_name = [&](int a, int b) { return g.name(a) < g.name(b); };
    std::sort(xs.begin(), xs.end(), by_name);
    std::sort(ys.begin(), ys.end(), by_name);

    std::vector<uint64_t> compat(static_cast<size_t>(h), 0);
    for (int xi = 0; xi < h; ++xi)
      for (int yi = 0; yi < h; ++yi)
        if (g.has_edge(xs[static_cast<size_t>(xi)], ys[static_cast<size_t>(yi)]))
          compat[static_cast<size_t>(xi)] |= uint64_t{1} << yi;

    Matcher matcher(compat, h);
    std::vector<int> all_x(static_cast<size_t>(h));
    for (int i = 0; i < h; ++i) all_x[static_cast<size_t>(i)] = i;
    if (matcher.solve(all_x) != h) continue;  // no perfect matching for this cover

    // lexicographically smallest pairing: assign each x (in name order) the
    // smallest-name y that keeps the rest perfectly matchable
    std::vector<int> assigned(static_cast<size_t>(h), -1);
    uint64_t used_y = 0;
    for (int xi = 0; xi < h; ++xi) {
      bool placed = false;
      for (int yi = 0; yi < h && !placed; ++yi) {
        if ((used_y >> yi) & 1) continue;
        if (!((compat[static_cast<size_t>(xi)] >> yi) & 1)) continue;
        // feasibility of completing the remaining x positions
        std::vector<uint64_t> rest_adj = compat;
        for (auto& row : rest_adj) row &= ~(used_y | (uint64_t{1} << yi));
        Matcher rest(rest_adj, h);
        std::vector<int> rest_x;
        for (int k = xi + 1; k < h; ++k) rest_x.push_back(k);
        if (rest.solve(rest_x) == h - xi - 1) {
          assigned[static_cast<size_t>(xi)] = yi;
          used_y |= uint64_t{1} << yi;
          placed = true;
        }
      }
      if (!placed) break;  // defensive; perfect matching existed
    }
    if (std::find(assigned.begin(), assigned.end(), -1) != assigned.end()) continue;

    VwcLabeling l;
    for (int xi = 0; xi < h; ++xi)
      l.pairs.emplace_back(g.name(xs[static_cast<size_t>(xi)]),
                           g.name(ys[static_cast<size_t>(assigned[static_cast<size_t>(xi)])]));
    validate_labeling(g, l);
    return l;
  }
  throw NotVeryWellCovered("no cover admits a perfect matching onto its complement: " +
                           graph_digest(g));
}

bool check_vwc_characterization(const Graph& g, const VwcLabeling& l) {
  validate_labeling(g, l);
  int h = l.h();
  std::vector<int> x(static_cast<size_t>(h)), y(static_cast<size_t>(h));
  for (int i = 0; i < h; ++i) {
    x[static_cast<size_t>(i)] = g.index_of(l.pairs[static_cast<size_t>(i)].first);
    y[static_cast<size_t>(i)] = g.index_of(l.pairs[static_cast<size_t>(i)].second);
  }
  // (2) {x_i, y_j} in E => {x_i, x_j} not in E
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      if (i == j) continue;
      if (g.has_edge(x[static_cast<size_t>(i)], y[static_cast<size_t>(j)]) &&
          g.has_edge(x[static_cast<size_t>(i)], x[static_cast<size_t>(j)]))
        return false;
    }
  // (1) {z_i, x_j}, {y_j, x_k} in E => {z_i, x_k} in E, i,j,k distinct
  for (int i = 0; i < h; ++i) {
    for (int zi : {x[static_cast<size_t>(i)], y[static_cast<size_t>(i)]}) {
      for (int j = 0; j < h; ++j) {
        if (j == i) continue;
        if (!g.has_edge(zi, x[static_cast<size_t>(j)])) continue;
        for (int k = 0; k < h; ++k) {
          if (k == i || k == j) continue;
          if (g.has_edge(y[static_cast<size_t>(j)], x[static_cast<size_t>(k)]) &&
              !g.has_edge(zi, x[static_cast<size_t>(k)]))
            return false;
        }
      }
    }
  }
  return true;
}

VwcLabeling relabel_swap(const Graph& g, const VwcLabeling& l, int i) {
  validate_labeling(g, l);
  int h = l.h();
  if (i < 0 || i >= h) throw InvalidLabeling("pair index out of range");
  uint64_t xmask = 0;
  for (const auto& [x, y] : l.pairs) xmask |= uint64_t{1} << g.index_of(x);
  int xi = g.index_of(l.pairs[static_cast<size_t>(i)].first);
  uint64_t outside = g.neighbors(xi) & ~xmask;

  VwcLabeling out;
  for (int j = 0; j < h; ++j) {
    const auto& [xj, yj] = l.pairs[static_cast<size_t>(j)];
    bool swap_j = (outside >> g.index_of(yj)) & 1;
    if (swap_j)
      out.pairs.emplace_back(yj, xj);
    else
      out.pairs.emplace_back(xj, yj);
  }
  return out;
}

namespace {

struct FamilyScaffold {
  int h;
  std::vector<std::string> names;                    // x1..xh then y1..yh
  std::vector<std::pair<int, int>> candidates;       // candidate extra edges
  std::vector<std::pair<std::string, std::string>> matching;

  explicit FamilyScaffold(int hh) : h(hh) {
    for (int i = 0; i < h; ++i) names.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < h; ++i) names.push_back("y" + std::to_string(i + 1));
    for (int i = 0; i < h; ++i)
      matching.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(h + i)]);
    for (int i = 0; i < h; ++i)
      for (int j = i + 1; j < h; ++j) candidates.emplace_back(i, j);  // x_i x_j
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        if (i != j) candidates.emplace_back(i, h + j);  // x_i y_j
  }

  // adjacency over indices 0..2h-1 for a candidate subset
  std::vector<uint64_t> adjacency(uint64_t subset) const {
    std::vector<uint64_t> adj(static_cast<size_t>(2 * h), 0);
    auto link = [&](int a, int c) {
      adj[static_cast<size_t>(a)] |= uint64_t{1} << c;
      adj[static_cast<size_t>(c)] |= uint64_t{1} << a;
    };
    for (int i = 0; i < h; ++i) link(i, h + i);
    for (size_t e = 0; e < candidates.size(); ++e)
      if ((subset >> e) & 1) link(candidates[e].first, candidates[e].second);
    return adj;
  }

  // conditions (1) and (2) on the fixed pairing (x_i, y_i)
  bool passes(const std::vector<uint64_t>& adj) const {
    auto has = [&](int a, int c) { return (adj[static_cast<size_t>(a)] >> c) & 1; };
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) {
        if (i == j) continue;
        if (has(i, h + j) && has(i, j)) return false;
      }
    for (int i = 0; i < h; ++i) {
      for (int zi : {i, h + i}) {
        for (int j = 0; j < h; ++j) {
          if (j == i || !has(zi, j)) continue;
          for (int k = 0; k < h; ++k) {
            if (k == i || k == j) continue;
            if (has(h + j, k) && !has(zi, k)) return false;
          }
        }
      }
    }
    return true;
  }

  LabeledGraph build(uint64_t subset) const {
    std::vector<std::pair<std::string, std::string>> edges = matching;
    for (size_t e = 0; e < candidates.size(); ++e)
      if ((subset >> e) & 1)
        edges.emplace_back(names[static_cast<size_t>(candidates[e].first)],
                           names[static_cast<size_t>(candidates[e].second)]);
    LabeledGraph out;
    out.graph = Graph(names, edges);
    for (int i = 0; i < h; ++i)
      out.labeling.pairs.emplace_back(names[static_cast<size_t>(i)],
                                      names[static_cast<size_t>(h + i)]);
    return out;
  }
};

void check_family_h(int h, const Budgets& b) {
  if (h < 1) throw Error("family parameter h must be >= 1");
  if (h > b.max_family_h)
    throw BudgetExceeded("max_family_h: requested h=" + std::to_string(h) +
                         " exceeds budget " + std::to_string(b.max_family_h));
}

}  // namespace

std::vector<LabeledGraph> vwc_family_exhaustive(int h, bool dedup_isomorphic,
                                                const Budgets& b) {
  check_family_h(h, b);
  FamilyScaffold sc(h);
  size_t bits = sc.candidates.size();
  std::vector<LabeledGraph> out;
  std::set<std::vector<uint64_t>> seen;
  for (uint64_t subset = 0; subset < (uint64_t{1} << bits); ++subset) {
    auto adj = sc.adjacency(subset);
    if (!sc.passes(adj)) continue;
    LabeledGraph lg = sc.build(subset);
    if (dedup_isomorphic) {
      auto key = canonical_form(lg.graph, b);
      if (!seen.insert(key).second) continue;
    }
    out.push_back(std::move(lg));
  }
  return out;
}

std::vector<LabeledGraph> vwc_family_random(int h, uint64_t seed, int count,
                                            const Budgets& b) {
  check_family_h(h, b);
  if (count < 0) throw Error("family sample count must be >= 0");
  FamilyScaffold sc(h);
  size_t bits = sc.candidates.size();
  uint64_t mask = bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
  std::mt19937_64 rng(seed);
  std::vector<LabeledGraph> out;
  long attempts = 0;
  const long attempt_cap = static_cast<long>(count) * 100000 + 1000;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > attempt_cap)
      throw BudgetExceeded("max_walks: random family sampling exceeded attempt cap");
    uint64_t subset = rng() & mask;
    auto adj = sc.adjacency(subset);
    if (!sc.passes(adj)) continue;
    out.push_back(sc.build(subset));
  }
  return out;
}

std::vector<LabeledGraph> generate_vwc_family(int h, FamilyMode mode, uint64_t seed,
                                              int count, bool dedup_isomorphic,
                                              const Budgets& b) {
  if (mode == FamilyMode::Exhaustive) return vwc_family_exhaustive(h, dedup_isomorphic, b);
  return vwc_family_random(h, seed, count, b);
}

}  // namespace edgereg
