#include "edgereg/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "edgereg/errors.hpp"

namespace edgereg {

void Graph::add_vertex(const std::string& name, const Budgets& b) {
  if (name.empty()) throw ParseError("empty vertex name");
  if (index_.count(name)) return;
  if (vertex_count() >= b.max_vertices || vertex_count() >= 64)
    throw BudgetExceeded("max_vertices: graph would exceed " +
                         std::to_string(b.max_vertices) + " vertices");
  index_.emplace(name, vertex_count());
  names_.push_back(name);
  adj_.push_back(0);
}

void Graph::add_edge_by_name(const std::string& u, const std::string& v,
                             const Budgets& b) {
  if (u == v) throw ParseError("loop edge at vertex " + u);
  add_vertex(u, b);
  add_vertex(v, b);
  int i = index_.at(u), j = index_.at(v);
  adj_[static_cast<size_t>(i)] |= uint64_t{1} << j;
  adj_[static_cast<size_t>(j)] |= uint64_t{1} << i;
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges,
             const Budgets& b) {
  for (const auto& v : vertices) {
    if (index_.count(v)) throw VertexNameCollision(v);
    add_vertex(v, b);
  }
  for (const auto& [u, v] : edges) add_edge_by_name(u, v, b);
}

Graph Graph::parse(std::istream& in, const Budgets& b) {
  Graph g;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 2)
        throw ParseError("line " + std::to_string(lineno) +
                         ": vertex line needs exactly one name");
      g.add_vertex(tok[1], b);
    } else if (tok.size() == 2) {
      g.add_edge_by_name(tok[0], tok[1], b);
    } else {
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected two vertex tokens");
    }
  }
  return g;
}

Graph Graph::parse_string(const std::string& text, const Budgets& b) {
  std::istringstream in(text);
  return parse(in, b);
}

Graph Graph::parse_file(const std::string& path, const Budgets& b) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return parse(in, b);
}

void Graph::emit(std::ostream& out) const {
  for (const auto& v : names_) out << "vertex " << v << "\n";
  for (const auto& [i, j] : edges()) out << names_[static_cast<size_t>(i)] << " "
                                         << names_[static_cast<size_t>(j)] << "\n";
}

std::string Graph::to_text() const {
  std::ostringstream out;
  emit(out);
  return out.str();
}

int Graph::edge_count() const {
  int total = 0;
  for (uint64_t row : adj_) total += std::popcount(row);
  return total / 2;
}

bool Graph::has_vertex(const std::string& name) const {
  return index_.count(name) != 0;
}

int Graph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownVertex(name);
  return it->second;
}

bool Graph::has_edge(int u, int v) const {
  return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

bool Graph::has_edge(const std::string& u, const std::string& v) const {
  return has_edge(index_of(u), index_of(v));
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

uint64_t Graph::vertex_mask() const {
  int n = vertex_count();
  return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  int n = vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<std::string, std::string>> Graph::edge_names() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [i, j] : edges())
    out.emplace_back(names_[static_cast<size_t>(i)], names_[static_cast<size_t>(j)]);
  return out;
}

Graph Graph::induced(uint64_t keep) const {
  Graph g;
  std::vector<int> map(static_cast<size_t>(vertex_count()), -1);
  for (int v = 0; v < vertex_count(); ++v) {
    if ((keep >> v) & 1) {
      map[static_cast<size_t>(v)] = g.vertex_count();
      g.index_.emplace(names_[static_cast<size_t>(v)], g.vertex_count());
      g.names_.push_back(names_[static_cast<size_t>(v)]);
      g.adj_.push_back(0);
    }
  }
  for (int v = 0; v < vertex_count(); ++v) {
    if (!((keep >> v) & 1)) continue;
    uint64_t row = adj_[static_cast<size_t>(v)] & keep;
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      g.adj_[static_cast<size_t>(map[static_cast<size_t>(v)])] |=
          uint64_t{1} << map[static_cast<size_t>(w)];
    }
  }
  return g;
}

uint64_t closed_neighborhood(const Graph& g, uint64_t s) {
  uint64_t out = s;
  uint64_t rest = s;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    out |= g.neighbors(v);
  }
  return out;
}

namespace {
uint64_t mask_of_names(const Graph& g, const std::vector<std::string>& s) {
  uint64_t m = 0;
  for (const auto& name : s) m |= uint64_t{1} << g.index_of(name);
  return m;
}
}  // namespace

Graph delete_closed_neighborhood(const Graph& g, const std::vector<std::string>& s) {
  uint64_t drop = closed_neighborhood(g, mask_of_names(g, s));
  return g.induced(g.vertex_mask() & ~drop);
}

Graph delete_vertices(const Graph& g, const std::vector<std::string>& s) {
  return g.induced(g.vertex_mask() & ~mask_of_names(g, s));
}

Graph whisker(const Graph& g) {
  std::vector<std::string> verts = g.vertices();
  std::vector<std::pair<std::string, std::string>> edges = g.edge_names();
  std::set<std::string> used(verts.begin(), verts.end());
  for (const auto& v : g.vertices()) {
    std::string pendant = v + "_w";
    while (used.count(pendant)) pendant += "_w";
    used.insert(pendant);
    edges.emplace_back(v, pendant);
  }
  return Graph(verts, edges);
}

Graph join(const std::vector<Graph>& parts) {
  std::vector<std::string> verts;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& part : parts) {
    for (const auto& v : part.vertices()) {
      if (std::find(verts.begin(), verts.end(), v) != verts.end())
        throw VertexNameCollision(v);
      verts.push_back(v);
    }
    for (const auto& e : part.edge_names()) edges.push_back(e);
  }
  // cross edges between distinct parts
  size_t offset = 0;
  std::vector<size_t> starts;
  for (const auto& part : parts) {
    starts.push_back(offset);
    offset += static_cast<size_t>(part.vertex_count());
  }
  for (size_t a = 0; a < parts.size(); ++a)
    for (size_t b = a + 1; b < parts.size(); ++b)
      for (const auto& u : parts[a].vertices())
        for (const auto& v : parts[b].vertices()) edges.emplace_back(u, v);
  return Graph(verts, edges);
}

Graph prefix_vertices(const Graph& g, const std::string& prefix) {
  std::vector<std::string> verts;
  for (const auto& v : g.vertices()) verts.push_back(prefix + v);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edge_names()) edges.emplace_back(prefix + u, prefix + v);
  return Graph(verts, edges);
}

// ---- exact search -------------------------------------------------------

namespace {

// Max independent set on the remaining candidate mask, classic branch and
// bound: pick a vertex of max degree inside the candidate set, branch on
// taking/skipping it, prune by popcount bound.
struct MisSolver {
  const Graph& g;
  int best = 0;
  uint64_t best_set = 0;

  explicit MisSolver(const Graph& graph) : g(graph) {}

  void run(uint64_t cand, uint64_t chosen, int size) {
    if (size + std::popcount(cand) <= best) return;
    if (!cand) {
      if (size > best) {
        best = size;
        best_set = chosen;
      }
      return;
    }
    int pick = -1, pick_deg = -1;
    uint64_t rest = cand;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int d = std::popcount(g.neighbors(v) & cand);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    run(cand & ~(uint64_t{1} << pick) & ~g.neighbors(pick),
        chosen | (uint64_t{1} << pick), size + 1);
    run(cand & ~(uint64_t{1} << pick), chosen, size);
  }
};

// Maximal independent sets = maximal cliques of the complement.
// Bron-Kerbosch with pivoting; fn returning false aborts the enumeration.
struct MaximalIndSets {
  const Graph& g;
  const std::function<bool(uint64_t)>& fn;
  bool stopped = false;

  uint64_t nonadj(int v) const {
    return ~(g.neighbors(v) | (uint64_t{1} << v)) & g.vertex_mask();
  }

  void expand(uint64_t r, uint64_t p, uint64_t x) {
    if (stopped) return;
    if (!p && !x) {
      if (!fn(r)) stopped = true;
      return;
    }
    uint64_t px = p | x;
    int pivot = std::countr_zero(px);
    int best_cover = -1;
    uint64_t scan = px;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int cover = std::popcount(nonadj(v) & p);
      if (cover > best_cover) {
        best_cover = cover;
        pivot = v;
      }
    }
    uint64_t branch = p & ~nonadj(pivot);
    while (branch) {
      int v = std::countr_zero(branch);
      branch &= branch - 1;
      uint64_t vbit = uint64_t{1} << v;
      expand(r | vbit, p & nonadj(v), x & nonadj(v));
      if (stopped) return;
      p &= ~vbit;
      x |= vbit;
    }
  }
};

}  // namespace

int independence_number(const Graph& g) {
  MisSolver solver(g);
  solver.run(g.vertex_mask(), 0, 0);
  return solver.best;
}

void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(uint64_t)>& fn) {
  if (g.vertex_count() == 0) {
    fn(0);  // the empty set is the unique maximal independent set
    return;
  }
  MaximalIndSets e{g, fn};
  e.expand(0, g.vertex_mask(), 0);
}

bool is_vertex_cover(const Graph& g, uint64_t cover) {
  for (const auto& [i, j] : g.edges())
    if (!((cover >> i) & 1) && !((cover >> j) & 1)) return false;
  return true;
}

bool is_minimal_vertex_cover(const Graph& g, uint64_t cover) {
  if (!is_vertex_cover(g, cover)) return false;
  uint64_t rest = cover;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    // v needs a private edge: a neighbor outside the cover
    if (!(g.neighbors(v) & ~cover)) return false;
  }
  return true;
}

namespace {

// Induced matchings of G are independent sets of the conflict graph whose
// vertices are the edges of G, two edges conflicting when they share an
// endpoint or are joined by an edge of G.
struct InducedMatchingSolver {
  std::vector<std::vector<uint64_t>> conflict;  // rows of edge-conflict masks
  int m = 0;
  int words = 0;
  int best = -1;
  std::vector<int> best_pick, pick;

  void run(std::vector<uint64_t> cand, int size) {
    if (size > best) {
      best = size;
      best_pick = pick;
    }
    int remaining = 0;
    for (uint64_t w : cand) remaining += std::popcount(w);
    if (size + remaining <= best) return;
    int e = -1;
    for (int w = 0; w < words && e < 0; ++w)
      if (cand[static_cast<size_t>(w)])
        e = w * 64 + std::countr_zero(cand[static_cast<size_t>(w)]);
    if (e < 0) return;
    auto with = cand;
    with[static_cast<size_t>(e >> 6)] &= ~(uint64_t{1} << (e & 63));
    for (int w = 0; w < words; ++w)
      with[static_cast<size_t>(w)] &= ~conflict[static_cast<size_t>(e)][static_cast<size_t>(w)];
    pick.push_back(e);
    run(with, size + 1);
    pick.pop_back();
    cand[static_cast<size_t>(e >> 6)] &= ~(uint64_t{1} << (e & 63));
    run(cand, size);
  }
};

}  // namespace

MatchingCertificate induced_matching_witness(const Graph& g) {
  auto edge_list = g.edges();
  int m = static_cast<int>(edge_list.size());
  MatchingCertificate cert;
  if (m == 0) return cert;

  InducedMatchingSolver solver;
  solver.m = m;
  solver.words = (m + 63) / 64;
  solver.conflict.assign(static_cast<size_t>(m),
                         std::vector<uint64_t>(static_cast<size_t>(solver.words), 0));
  for (int a = 0; a < m; ++a) {
    auto [i1, j1] = edge_list[static_cast<size_t>(a)];
    uint64_t span1 = (uint64_t{1} << i1) | (uint64_t{1} << j1);
    for (int b = a + 1; b < m; ++b) {
      auto [i2, j2] = edge_list[static_cast<size_t>(b)];
      uint64_t span2 = (uint64_t{1} << i2) | (uint64_t{1} << j2);
      bool clash = (span1 & span2) != 0 || g.has_edge(i1, i2) || g.has_edge(i1, j2) ||
                   g.has_edge(j1, i2) || g.has_edge(j1, j2);
      if (clash) {
        solver.conflict[static_cast<size_t>(a)][static_cast<size_t>(b >> 6)] |=
            uint64_t{1} << (b & 63);
        solver.conflict[static_cast<size_t>(b)][static_cast<size_t>(a >> 6)] |=
            uint64_t{1} << (a & 63);
      }
    }
  }
  std::vector<uint64_t> all(static_cast<size_t>(solver.words), 0);
  for (int e = 0; e < m; ++e)
    all[static_cast<size_t>(e >> 6)] |= uint64_t{1} << (e & 63);
  solver.run(all, 0);

  for (int e : solver.best_pick) {
    auto [i, j] = edge_list[static_cast<size_t>(e)];
    cert.edges.emplace_back(g.name(i), g.name(j));
  }
  return cert;
}

int induced_matching_number(const Graph& g) {
  return static_cast<int>(induced_matching_witness(g).edges.size());
}

bool matching_certificate_valid(const Graph& g, const MatchingCertificate& cert) {
  std::vector<std::pair<int, int>> picked;
  for (const auto& [u, v] : cert.edges) {
    int i = g.index_of(u), j = g.index_of(v);
    if (!g.has_edge(i, j)) return false;
    picked.emplace_back(i, j);
  }
  for (size_t a = 0; a < picked.size(); ++a)
    for (size_t b = a + 1; b < picked.size(); ++b) {
      int verts[4] = {picked[a].first, picked[a].second, picked[b].first,
                      picked[b].second};
      for (int p = 0; p < 2; ++p)
        for (int q = 2; q < 4; ++q)
          if (verts[p] == verts[q] || g.has_edge(verts[p], verts[q])) return false;
    }
  return true;
}

namespace {

// Lexicographically minimal adjacency matrix over all vertex permutations.
// Placing vertex number p reveals the chunk of bits linking it to positions
// 0..p-1 (position 0 as the most significant bit), so the chunk sequence is
// a complete lex-comparable invariant.  DFS tries candidates by ascending
// chunk and prunes any branch whose prefix already exceeds the best.
struct Canonicalizer {
  const Graph& g;
  int n;
  std::vector<int> perm;
  std::vector<uint64_t> chunks;
  std::vector<uint64_t> best;
  bool have_best = false;

  explicit Canonicalizer(const Graph& graph)
      : g(graph), n(graph.vertex_count()) {}

  uint64_t chunk_of(int v) const {
    int p = static_cast<int>(perm.size());
    uint64_t c = 0;
    for (int k = 0; k < p; ++k)
      if (g.has_edge(v, perm[static_cast<size_t>(k)])) c |= uint64_t{1} << (p - 1 - k);
    return c;
  }

  void search(uint64_t used) {
    int p = static_cast<int>(perm.size());
    if (p == n) {
      if (!have_best || chunks < best) {
        best = chunks;
        have_best = true;
      }
      return;
    }
    std::vector<std::pair<uint64_t, int>> cands;
    for (int v = 0; v < n; ++v)
      if (!((used >> v) & 1)) cands.emplace_back(chunk_of(v), v);
    std::sort(cands.begin(), cands.end());
    for (const auto& [c, v] : cands) {
      // Prune only when the current prefix ties the best one; a strictly
      // smaller prefix admits any continuation.  best can change inside the
      // loop, so re-evaluate every iteration.
      if (have_best && equal_prefix(p) && c > best[static_cast<size_t>(p)]) break;
      perm.push_back(v);
      chunks.push_back(c);
      search(used | (uint64_t{1} << v));
      chunks.pop_back();
      perm.pop_back();
    }
  }

  bool equal_prefix(int p) const {
    for (int k = 0; k < p; ++k)
      if (chunks[static_cast<size_t>(k)] != best[static_cast<size_t>(k)]) return false;
    return true;
  }
};

}  // namespace

std::vector<uint64_t> canonical_form(const Graph& g, const Budgets& b) {
  if (g.vertex_count() > b.max_canonical_vertices)
    throw BudgetExceeded("max_canonical_vertices: canonical form limited to " +
                         std::to_string(b.max_canonical_vertices) + " vertices");
  Canonicalizer c(g);
  c.search(0);
  return c.best;
}

std::string graph_digest(const Graph& g) {
  std::vector<std::string> tokens;
  for (const auto& [u, v] : g.edge_names()) tokens.push_back(u + "-" + v);
  std::sort(tokens.begin(), tokens.end());
  uint64_t touched = 0;
  for (const auto& [i, j] : g.edges()) touched |= (uint64_t{1} << i) | (uint64_t{1} << j);
  std::vector<std::string> isolated;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!((touched >> v) & 1)) isolated.push_back("v:" + g.name(v));
  std::sort(isolated.begin(), isolated.end());
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += " ";
    out += t;
  }
  for (const auto& t : isolated) {
    if (!out.empty()) out += " ";
    out += t;
  }
  if (out.empty()) out = "(empty)";
  return out;
}

}  // namespace edgereg
