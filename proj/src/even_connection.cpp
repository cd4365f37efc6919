#include "edgereg/even_connection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "edgereg/errors.hpp"

namespace edgereg {

Monomial EdgeProduct::product_monomial() const {
  Monomial m = mono_one(base.vertex_count());
  for (const auto& [i, j] : edges) {
    m.exps[static_cast<size_t>(i)] += 1;
    m.exps[static_cast<size_t>(j)] += 1;
  }
  return m;
}

std::string EdgeProduct::to_string() const {
  std::string out;
  for (const auto& [i, j] : edges) {
    if (!out.empty()) out += ",";
    out += base.name(i) + "-" + base.name(j);
  }
  return out;
}

EdgeProduct make_edge_product(
    const Graph& g, const std::vector<std::pair<std::string, std::string>>& edges) {
  if (edges.empty()) throw ParseError("edge product needs at least one edge");
  EdgeProduct p;
  p.base = g;
  for (const auto& [a, b] : edges) {
    int i = g.index_of(a), j = g.index_of(b);
    if (!g.has_edge(i, j))
      throw ParseError("product member " + a + "-" + b + " is not an edge");
    p.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  return p;
}

EdgeProduct parse_edge_product(const Graph& g, const std::string& text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string tok;
  std::istringstream stream(text);
  while (std::getline(stream, tok, ',')) {
    if (tok.empty()) throw ParseError("empty product token in: " + text);
    std::optional<std::pair<std::string, std::string>> found;
    for (size_t pos = tok.find('-'); pos != std::string::npos;
         pos = tok.find('-', pos + 1)) {
      std::string a = tok.substr(0, pos), b = tok.substr(pos + 1);
      if (!a.empty() && !b.empty() && g.has_vertex(a) && g.has_vertex(b)) {
        if (found) throw ParseError("ambiguous product token: " + tok);
        found = {{a, b}};
      }
    }
    if (!found) throw ParseError("cannot read product token as an edge: " + tok);
    pairs.push_back(*found);
  }
  return make_edge_product(g, pairs);
}

std::vector<std::string> WitnessPath::names(const Graph& g) const {
  std::vector<std::string> out;
  for (int v : vertices) out.push_back(g.name(v));
  return out;
}

bool witness_valid(const EdgeProduct& p, const std::string& u, const std::string& v,
                   const WitnessPath& w, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const Graph& g = p.base;
  size_t len = w.vertices.size();
  if (len < 4 || len % 2 != 0) return fail("walk must have 2k+2 vertices with k >= 1");
  size_t k = (len - 2) / 2;
  if (w.odd_steps.size() != k) return fail("product step assignment has wrong length");
  for (int x : w.vertices)
    if (x < 0 || x >= g.vertex_count()) return fail("vertex index out of range");
  if (g.name(w.vertices.front()) != u || g.name(w.vertices.back()) != v)
    return fail("endpoints do not match the pair");
  for (size_t r = 0; r + 1 < len; ++r)
    if (!g.has_edge(w.vertices[r], w.vertices[r + 1]))
      return fail("step " + std::to_string(r) + " is not an edge");
  std::set<int> used;
  for (size_t l = 0; l < k; ++l) {
    int idx = w.odd_steps[l];
    if (idx < 0 || idx >= p.s()) return fail("product edge index out of range");
    if (!used.insert(idx).second) return fail("product edge index used twice");
    auto [a, b] = p.edges[static_cast<size_t>(idx)];
    int c = w.vertices[2 * l + 1], d = w.vertices[2 * l + 2];
    if (!((a == c && b == d) || (a == d && b == c)))
      return fail("product step " + std::to_string(l) + " does not match its edge");
  }
  return true;
}

namespace {

// Distinct product edges with multiplicities and their list positions.
struct ProductInfo {
  std::vector<std::pair<int, int>> distinct;
  std::vector<int> mult;
  std::vector<std::vector<int>> positions;

  explicit ProductInfo(const EdgeProduct& p) {
    std::map<std::pair<int, int>, int> at;
    for (size_t t = 0; t < p.edges.size(); ++t) {
      auto e = p.edges[t];
      auto it = at.find(e);
      if (it == at.end()) {
        at[e] = static_cast<int>(distinct.size());
        distinct.push_back(e);
        mult.push_back(1);
        positions.push_back({static_cast<int>(t)});
      } else {
        mult[static_cast<size_t>(it->second)] += 1;
        positions[static_cast<size_t>(it->second)].push_back(static_cast<int>(t));
      }
    }
  }
};

// All vertices reachable from u by a complete walk: BFS over (vertex after
// the leading plain step, usage counts).  Every neighbor of a post-product
// vertex closes a walk, and also re-enters the state space.
uint64_t even_targets(const Graph& g, const ProductInfo& info, int u) {
  std::set<std::pair<int, std::vector<int>>> seen;
  std::vector<std::pair<int, std::vector<int>>> queue;
  std::vector<int> zero(info.distinct.size(), 0);
  uint64_t start = g.neighbors(u);
  for (int v = 0; v < g.vertex_count(); ++v)
    if ((start >> v) & 1)
      if (seen.insert({v, zero}).second) queue.emplace_back(v, zero);
  uint64_t targets = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [a, usage] = queue[head];
    for (size_t d = 0; d < info.distinct.size(); ++d) {
      if (usage[d] >= info.mult[d]) continue;
      auto [c1, c2] = info.distinct[d];
      int next = a == c1 ? c2 : (a == c2 ? c1 : -1);
      if (next < 0) continue;
      std::vector<int> usage2 = usage;
      usage2[d] += 1;
      uint64_t nb = g.neighbors(next);
      targets |= nb;
      for (int b2 = 0; b2 < g.vertex_count(); ++b2)
        if ((nb >> b2) & 1)
          if (seen.insert({b2, usage2}).second) queue.emplace_back(b2, usage2);
    }
  }
  return targets;
}

// Depth-first walk builder exploring next vertices in name order, so the
// first complete walk for a given length is the lexicographically least.
struct WalkSearch {
  const EdgeProduct& p;
  const ProductInfo& info;
  const Graph& g;
  int target;
  int want_k;
  bool stop_at_first;
  long budget;
  long* counter;

  std::vector<int> path;
  std::vector<int> used;
  std::vector<int> step_distinct;
  std::vector<WitnessPath> found;

  WalkSearch(const EdgeProduct& prod, const ProductInfo& pi, int v, int k,
             bool first, long max_nodes, long* shared)
      : p(prod), info(pi), g(prod.base), target(v), want_k(k),
        stop_at_first(first), budget(max_nodes), counter(shared),
        used(pi.distinct.size(), 0) {}

  void tick() {
    if (++*counter > budget)
      throw BudgetExceeded("max_walks: walk enumeration exceeded " +
                           std::to_string(budget) + " nodes");
  }

  std::vector<int> name_sorted(uint64_t mask) const {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
      if ((mask >> v) & 1) out.push_back(v);
    std::sort(out.begin(), out.end(),
              [&](int a, int b) { return g.name(a) < g.name(b); });
    return out;
  }

  void record() {
    WitnessPath w;
    w.vertices = path;
    w.odd_steps.resize(static_cast<size_t>(want_k));
    std::vector<size_t> cursor(info.distinct.size(), 0);
    for (int l = 0; l < want_k; ++l) {
      size_t d = static_cast<size_t>(step_distinct[static_cast<size_t>(l)]);
      w.odd_steps[static_cast<size_t>(l)] =
          info.positions[d][cursor[d]++];
    }
    found.push_back(std::move(w));
  }

  bool done() const { return stop_at_first && !found.empty(); }

  // l product steps taken; path currently ends at an odd position vertex
  void product_step(int l) {
    tick();
    int a = path.back();
    std::vector<std::pair<std::string, int>> cands;
    for (size_t d = 0; d < info.distinct.size(); ++d) {
      if (used[d] >= info.mult[d]) continue;
      auto [c1, c2] = info.distinct[d];
      int next = a == c1 ? c2 : (a == c2 ? c1 : -1);
      if (next >= 0) cands.emplace_back(g.name(next), static_cast<int>(d));
    }
    std::sort(cands.begin(), cands.end());
    for (const auto& [name, d] : cands) {
      auto [c1, c2] = info.distinct[static_cast<size_t>(d)];
      int next = path.back() == c1 ? c2 : c1;
      path.push_back(next);
      used[static_cast<size_t>(d)] += 1;
      step_distinct.push_back(d);
      if (l + 1 == want_k) {
        if (g.has_edge(next, target)) {
          path.push_back(target);
          record();
          path.pop_back();
        }
      } else {
        free_step(l + 1);
      }
      step_distinct.pop_back();
      used[static_cast<size_t>(d)] -= 1;
      path.pop_back();
      if (done()) return;
    }
  }

  void free_step(int l) {
    tick();
    for (int v : name_sorted(g.neighbors(path.back()))) {
      path.push_back(v);
      product_step(l);
      path.pop_back();
      if (done()) return;
    }
  }

  void run(int u) {
    path = {u};
    free_step(0);
    path.clear();
  }
};

std::vector<WitnessPath> enumerate_walks(const EdgeProduct& p, const ProductInfo& info,
                                         int u, int v, bool first_only, long budget,
                                         long* counter) {
  std::vector<WitnessPath> out;
  for (int k = 1; k <= p.s(); ++k) {
    WalkSearch search(p, info, v, k, first_only, budget, counter);
    search.run(u);
    for (auto& w : search.found) out.push_back(std::move(w));
    if (first_only && !out.empty()) break;
  }
  return out;
}

}  // namespace

std::optional<WitnessPath> is_even_connected(const EdgeProduct& p,
                                             const std::string& u,
                                             const std::string& v) {
  const Graph& g = p.base;
  int ui = g.index_of(u), vi = g.index_of(v);
  ProductInfo info(p);
  long counter = 0;
  auto walks = enumerate_walks(p, info, ui, vi, true, budgets().max_walks, &counter);
  if (walks.empty()) return std::nullopt;
  std::string why;
  if (!witness_valid(p, u, v, walks.front(), &why))
    throw Error("internal: search produced an invalid witness: " + why);
  return walks.front();
}

std::vector<WitnessPath> all_even_connection_walks(const EdgeProduct& p,
                                                   const std::string& u,
                                                   const std::string& v,
                                                   const Budgets& b) {
  const Graph& g = p.base;
  int ui = g.index_of(u), vi = g.index_of(v);
  ProductInfo info(p);
  long counter = 0;
  return enumerate_walks(p, info, ui, vi, false, b.max_walks, &counter);
}

MonomialIdeal colon_ideal_by_even_connections(const EdgeProduct& p) {
  const Graph& g = p.base;
  if (p.s() < 1) throw Error("edge product needs at least one edge");
  ProductInfo info(p);
  int n = g.vertex_count();
  std::vector<Monomial> gens;
  auto push_pair = [&](int a, int b) {
    Monomial m = mono_one(n);
    m.exps[static_cast<size_t>(a)] += 1;
    m.exps[static_cast<size_t>(b)] += 1;
    gens.push_back(std::move(m));
  };
  for (const auto& [i, j] : g.edges()) push_pair(i, j);
  for (int u = 0; u < n; ++u) {
    uint64_t targets = even_targets(g, info, u);
    for (int v = 0; v < n; ++v)
      if ((targets >> v) & 1) push_pair(std::min(u, v), std::max(u, v));
  }
  return MonomialIdeal(g.vertices(), gens);
}

ColonGraph colon_graph(const EdgeProduct& p) {
  ColonGraph cg;
  cg.origin = p;
  cg.colon = colon_ideal_by_even_connections(p);
  cg.polarized = polarize(cg.colon);
  const auto& vars = cg.polarized.ideal.ring_vars();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& gen : cg.polarized.ideal.gens()) {
    if (gen.degree() != 2 || !gen.squarefree())
      throw Error("internal: colon generator is not quadratic squarefree");
    std::vector<std::string> sup;
    for (size_t i = 0; i < gen.exps.size(); ++i)
      if (gen.exps[i] > 0) sup.push_back(vars[i]);
    edges.emplace_back(sup[0], sup[1]);
  }
  cg.gprime = Graph(vars, edges);
  for (const auto& [key, pidx] : cg.polarized.map.forward) {
    (void)pidx;
    if (key.second == 2)
      cg.self_loops.push_back(
          cg.polarized.map.base_vars[static_cast<size_t>(key.first)]);
  }
  return cg;
}

bool verify_colon_decomposition(const EdgeProduct& p, int i) {
  int s = p.s();
  if (i < 1 || i > s) throw Error("product index out of range");
  MonomialIdeal colon = colon_ideal_by_even_connections(p);
  if (!is_squarefree(colon))
    throw NotSquarefree("colon ideal has a square generator");
  MonomialIdeal base = edge_ideal(p.base);
  Monomial full = p.product_monomial();
  MonomialIdeal lhs = colon_by_monomial(power(base, s + 1), full);
  Monomial ei = mono_one(p.base.vertex_count());
  ei.exps[static_cast<size_t>(p.edges[static_cast<size_t>(i - 1)].first)] += 1;
  ei.exps[static_cast<size_t>(p.edges[static_cast<size_t>(i - 1)].second)] += 1;
  Monomial rest = mono_div(full, ei);
  MonomialIdeal step = colon_by_monomial(power(base, 2), ei);
  MonomialIdeal rhs = colon_by_monomial(power(step, s), rest);
  return ideal_equal(lhs, rhs);
}

bool verify_gprime_vwc(const Graph& g, const EdgeProduct& p) {
  if (!is_very_well_covered(g))
    throw NotVeryWellCovered("base graph is not very well-covered");
  ColonGraph cg = colon_graph(p);
  if (!is_squarefree(cg.colon))
    throw NotSquarefree("colon ideal has a square generator");
  return is_very_well_covered(cg.gprime);
}

bool LemmaReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const LemmaCheck& LemmaReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw Error("no such check: " + name);
}

namespace {

// Shared state for the five structural checks.
struct LemmaContext {
  const Graph& g;
  const VwcLabeling& l;
  const EdgeProduct& p;
  const Budgets& b;
  ColonGraph cg;

  LemmaContext(const Graph& gg, const VwcLabeling& ll, const EdgeProduct& pp,
               const Budgets& bb)
      : g(gg), l(ll), p(pp), b(bb), cg(colon_graph(pp)) {}

  bool gp_edge(const std::string& a, const std::string& c) const {
    return cg.gprime.has_edge(cg.gprime.index_of(a), cg.gprime.index_of(c));
  }

  // Membership of a*c in the colon ideal.  For distinct original vertices
  // this is adjacency in the colon graph; for a == c it asks for a square,
  // which polarization turns into the partner edge.
  bool colon_pair(const std::string& a, const std::string& c) const {
    Monomial m = mono_one(static_cast<int>(cg.colon.ring_vars().size()));
    m.exps[static_cast<size_t>(cg.colon.var_index(a))] += 1;
    m.exps[static_cast<size_t>(cg.colon.var_index(c))] += 1;
    return cg.colon.contains(m);
  }
};

LemmaCheck check_pair_step_closure(const LemmaContext& ctx) {
  LemmaCheck out{"pair_step_closure", true, 0, ""};
  int h = ctx.l.h();
  for (int i = 0; i < h; ++i) {
    for (const std::string& ti :
         {ctx.l.pairs[static_cast<size_t>(i)].first,
          ctx.l.pairs[static_cast<size_t>(i)].second}) {
      for (int j = 0; j < h; ++j) {
        if (j == i) continue;
        const auto& [xj, yj] = ctx.l.pairs[static_cast<size_t>(j)];
        if (!ctx.gp_edge(ti, xj)) continue;
        for (int k = 0; k < h; ++k) {
          if (k == i || k == j) continue;
          const std::string& xk = ctx.l.pairs[static_cast<size_t>(k)].first;
          if (!ctx.gp_edge(yj, xk)) continue;
          ++out.instances;
          if (!(ctx.gp_edge(ti, xk) || ctx.gp_edge(ti, yj))) {
            if (out.pass) {
              out.pass = false;
              out.counterexample = "t=" + ti + " through pair (" + xj + "," + yj +
                                   ") toward " + xk;
            }
          }
        }
      }
    }
  }
  return out;
}

LemmaCheck check_walk_neighbor_absorption(const LemmaContext& ctx) {
  LemmaCheck out{"walk_neighbor_absorption", true, 0, ""};
  const Graph& g = ctx.g;
  ProductInfo info(ctx.p);
  long counter = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = u; v < g.vertex_count(); ++v) {
      auto walks = enumerate_walks(ctx.p, info, u, v, false, ctx.b.max_walks,
                                   &counter);
      std::string un = g.name(u), vn = g.name(v);
      for (const auto& walk : walks) {
        for (int pi : walk.vertices) {
          std::string pn = g.name(pi);
          for (int w = 0; w < g.vertex_count(); ++w) {
            std::string wn = g.name(w);
            if (!ctx.gp_edge(wn, pn)) continue;
            ++out.instances;
            if (!(ctx.colon_pair(un, wn) || ctx.colon_pair(vn, wn))) {
              if (out.pass) {
                out.pass = false;
                out.counterexample = "walk " + un + ".." + vn + " vertex " + pn +
                                     " neighbor " + wn;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

LemmaCheck check_self_loop_closure(const LemmaContext& ctx) {
  LemmaCheck out{"self_loop_closure", true, 0, ""};
  const Graph& g = ctx.g;
  for (const std::string& u : ctx.cg.self_loops) {
    std::string mate;
    int pair_index = -1;
    for (int i = 0; i < ctx.l.h(); ++i) {
      const auto& [x, y] = ctx.l.pairs[static_cast<size_t>(i)];
      if (x == u) mate = y, pair_index = i;
      if (y == u) mate = x, pair_index = i;
    }
    if (pair_index < 0) throw Error("self-connected vertex missing from labeling");
    const auto& [x, y] = ctx.l.pairs[static_cast<size_t>(pair_index)];
    uint64_t hood = g.closed_neighbors(g.index_of(x)) |
                    g.closed_neighbors(g.index_of(y));
    int mi = ctx.cg.gprime.index_of(mate);
    uint64_t around_mate = ctx.cg.gprime.neighbors(mi);
    for (int ai = 0; ai < ctx.cg.gprime.vertex_count(); ++ai) {
      if (!((around_mate >> ai) & 1)) continue;
      std::string a = ctx.cg.gprime.name(ai);
      if (!g.has_vertex(a)) continue;
      for (int bi = 0; bi < g.vertex_count(); ++bi) {
        if (!((hood >> bi) & 1)) continue;
        std::string bn = g.name(bi);
        ++out.instances;
        if (!ctx.colon_pair(a, bn)) {
          if (out.pass) {
            out.pass = false;
            out.counterexample = "u=" + u + " a=" + a + " b=" + bn;
          }
        }
      }
    }
  }
  return out;
}

// Product edges surviving inside an induced subgraph, by names.
std::vector<std::pair<std::string, std::string>> surviving_product(
    const EdgeProduct& p, const Graph& h) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [i, j] : p.edges) {
    std::string a = p.base.name(i), b = p.base.name(j);
    if (h.has_vertex(a) && h.has_vertex(b)) out.emplace_back(a, b);
  }
  return out;
}

// The localized colon graph: plain subgraph when no product edge survives.
Graph localized_colon_graph(const Graph& h, const EdgeProduct& p) {
  auto sub = surviving_product(p, h);
  if (sub.empty()) return h;
  return colon_graph(make_edge_product(h, sub)).gprime;
}

// Pairwise comparison of a punched colon graph against the localized one:
// every edge must appear in the localized graph and conversely every
// localized edge between surviving vertices must be present.  Vertices
// missing from the localized graph may only appear isolated.
bool localized_match(const Graph& punched, const Graph& local,
                     std::string* why, const std::string& label) {
  for (int a = 0; a < punched.vertex_count(); ++a) {
    for (int c = a + 1; c < punched.vertex_count(); ++c) {
      std::string an = punched.name(a), cn = punched.name(c);
      bool punched_edge = punched.has_edge(a, c);
      bool local_edge = local.has_vertex(an) && local.has_vertex(cn) &&
                        local.has_edge(local.index_of(an), local.index_of(cn));
      if (punched_edge != local_edge) {
        *why = label + " pair {" + an + "," + cn + "} " +
               (punched_edge ? "missing from" : "only in") + " the localized graph";
        return false;
      }
    }
  }
  return true;
}

LemmaCheck check_deletion_localization(const LemmaContext& ctx) {
  LemmaCheck out{"deletion_localization", true, 0, ""};
  const Graph& g = ctx.g;
  for (int yi = 0; yi < g.vertex_count(); ++yi) {
    std::string yn = g.name(yi);
    Graph h = delete_closed_neighborhood(g, {yn});
    Graph local = localized_colon_graph(h, ctx.p);
    int ygp = ctx.cg.gprime.index_of(yn);
    uint64_t keep = ctx.cg.gprime.vertex_mask() &
                    ~ctx.cg.gprime.closed_neighbors(ygp);
    Graph punched = ctx.cg.gprime.induced(keep);
    std::string why;
    ++out.instances;
    if (!localized_match(punched, local, &why, "y=" + yn) && out.pass) {
      out.pass = false;
      out.counterexample = why;
    }
  }
  return out;
}

LemmaCheck check_pair_deletion_localization(const LemmaContext& ctx) {
  LemmaCheck out{"pair_deletion_localization", true, 0, ""};
  const Graph& g = ctx.g;
  for (const std::string& u : ctx.cg.self_loops) {
    std::string mate;
    std::string x, y;
    for (const auto& pr : ctx.l.pairs) {
      if (pr.first == u) mate = pr.second, x = pr.first, y = pr.second;
      if (pr.second == u) mate = pr.first, x = pr.first, y = pr.second;
    }
    if (mate.empty()) throw Error("self-connected vertex missing from labeling");
    Graph h = delete_closed_neighborhood(g, {x, y});
    Graph local = localized_colon_graph(h, ctx.p);
    int mi = ctx.cg.gprime.index_of(mate);
    uint64_t around_mate = ctx.cg.gprime.neighbors(mi);
    for (int ti = 0; ti < ctx.cg.gprime.vertex_count(); ++ti) {
      if (!((around_mate >> ti) & 1)) continue;
      std::string tn = ctx.cg.gprime.name(ti);
      if (!g.has_vertex(tn)) continue;
      uint64_t keep = ctx.cg.gprime.vertex_mask() &
                      ~ctx.cg.gprime.closed_neighbors(ti);
      Graph punched = ctx.cg.gprime.induced(keep);
      std::string why;
      ++out.instances;
      if (!localized_match(punched, local, &why, "u=" + u + " t=" + tn) &&
          out.pass) {
        out.pass = false;
        out.counterexample = why;
      }
    }
  }
  return out;
}

}  // namespace

LemmaReport verify_structural_lemmas(const Graph& g, const VwcLabeling& l,
                                     const EdgeProduct& p, const Budgets& b) {
  if (!(p.base == g)) throw Error("product base differs from graph");
  validate_labeling(g, l);
  if (!is_very_well_covered(g))
    throw NotVeryWellCovered("graph is not very well-covered");
  LemmaContext ctx(g, l, p, b);
  LemmaReport report;
  report.checks.push_back(check_pair_step_closure(ctx));
  report.checks.push_back(check_walk_neighbor_absorption(ctx));
  report.checks.push_back(check_self_loop_closure(ctx));
  report.checks.push_back(check_deletion_localization(ctx));
  report.checks.push_back(check_pair_deletion_localization(ctx));
  return report;
}

}  // namespace edgereg
