#include "edgereg/monomial.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "edgereg/errors.hpp"

namespace edgereg {

int Monomial::degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

bool Monomial::squarefree() const {
  for (int e : exps)
    if (e > 1) return false;
  return true;
}

uint64_t Monomial::support() const {
  uint64_t s = 0;
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > 0) s |= uint64_t{1} << i;
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  for (size_t i = 0; i < exps.size(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial mono_one(int nvars) { return Monomial{std::vector<int>(static_cast<size_t>(nvars), 0)}; }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (size_t i = 0; i < out.exps.size(); ++i) out.exps[i] += b.exps[i];
  return out;
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (size_t i = 0; i < out.exps.size(); ++i) out.exps[i] = std::min(out.exps[i], b.exps[i]);
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (size_t i = 0; i < out.exps.size(); ++i) out.exps[i] = std::max(out.exps[i], b.exps[i]);
  return out;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (size_t i = 0; i < out.exps.size(); ++i) {
    out.exps[i] -= b.exps[i];
    if (out.exps[i] < 0) throw Error("monomial division is not exact");
  }
  return out;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.exps.size(); i-- > 0;) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
  }
  return 0;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (m.exps[i] > 1) out += "^" + std::to_string(m.exps[i]);
  }
  if (out.empty()) out = "1";
  return out;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> raw) {
  // drop zero entries never occur; sort ascending so any divisor precedes
  std::sort(raw.begin(), raw.end(), [](const Monomial& a, const Monomial& b) {
    return degrevlex_cmp(a, b) < 0;
  });
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<Monomial> kept;
  std::vector<uint64_t> kept_supp;
  std::vector<int> kept_deg;
  for (const auto& m : raw) {
    uint64_t supp = m.support();
    int deg = m.degree();
    bool redundant = false;
    for (size_t k = 0; k < kept.size() && !redundant; ++k) {
      if (kept_deg[k] > deg) break;  // sorted by degree: no later divisor
      if ((kept_supp[k] & ~supp) != 0) continue;
      if (kept[k].divides(m)) redundant = true;
    }
    if (!redundant) {
      kept.push_back(m);
      kept_supp.push_back(supp);
      kept_deg.push_back(deg);
    }
  }
  return kept;
}

void check_ring(const std::vector<std::string>& vars, const Budgets& b) {
  if (static_cast<int>(vars.size()) > b.max_ring_vars || vars.size() > 64)
    throw BudgetExceeded("max_ring_vars: ring would have " + std::to_string(vars.size()) +
                         " variables, budget " + std::to_string(b.max_ring_vars));
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) throw VertexNameCollision(*dup);
  for (const auto& v : vars)
    if (v.empty()) throw ParseError("empty variable name");
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> ring_vars, std::vector<Monomial> raw,
                             const Budgets& b)
    : vars_(std::move(ring_vars)) {
  check_ring(vars_, b);
  for (const auto& m : raw) {
    if (m.exps.size() != vars_.size())
      throw RingMismatch("generator arity does not match ring");
    for (int e : m.exps)
      if (e < 0) throw Error("negative exponent");
  }
  gens_ = minimalize(std::move(raw));
  // a unit generator swallows everything
  if (!gens_.empty() && gens_[0].is_one()) gens_ = {mono_one(nvars())};
}

int MonomialIdeal::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  throw UnknownVertex(name);
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.exps.size() != vars_.size()) throw RingMismatch("monomial arity does not match ring");
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

void MonomialIdeal::emit(std::ostream& out) const {
  out << "# ring:";
  for (const auto& v : vars_) out << " " << v;
  out << "\n";
  for (const auto& g : gens_) out << monomial_to_string(g, vars_) << "\n";
}

std::string MonomialIdeal::to_text() const {
  std::ostringstream out;
  emit(out);
  return out.str();
}

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
  Monomial m = mono_one(static_cast<int>(vars.size()));
  if (text == "1") return m;
  std::string factor;
  std::istringstream stream(text);
  while (std::getline(stream, factor, '*')) {
    if (factor.empty()) throw ParseError("empty factor in monomial: " + text);
    std::string name = factor;
    int exp = 1;
    auto caret = factor.find('^');
    if (caret != std::string::npos) {
      name = factor.substr(0, caret);
      std::string expstr = factor.substr(caret + 1);
      try {
        size_t used = 0;
        exp = std::stoi(expstr, &used);
        if (used != expstr.size()) throw std::invalid_argument(expstr);
      } catch (const std::exception&) {
        throw ParseError("bad exponent in monomial: " + text);
      }
      if (exp < 1) throw ParseError("exponent must be positive: " + text);
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw ParseError("unknown variable in monomial: " + name);
    m.exps[static_cast<size_t>(it - vars.begin())] += exp;
  }
  return m;
}

MonomialIdeal MonomialIdeal::parse(std::istream& in, const Budgets& b) {
  std::vector<std::string> lines;
  std::vector<std::string> vars;
  bool have_ring = false;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      // optional ring declaration pragma
      std::istringstream pragma(line);
      std::string hash, key;
      pragma >> hash;
      std::string rest = line.substr(line.find('#') + 1);
      std::istringstream body(rest);
      if (body >> key && key == "ring:") {
        std::string v;
        while (body >> v) vars.push_back(v);
        have_ring = true;
      }
      continue;
    }
    lines.push_back(first);
    std::string extra;
    if (ls >> extra) throw ParseError("unexpected token after monomial: " + extra);
  }
  if (!have_ring) {
    // infer variables in order of first appearance
    for (const auto& text : lines) {
      std::istringstream stream(text);
      std::string factor;
      while (std::getline(stream, factor, '*')) {
        auto caret = factor.find('^');
        std::string name = caret == std::string::npos ? factor : factor.substr(0, caret);
        if (name == "1") continue;
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
      }
    }
  }
  std::vector<Monomial> gens;
  for (const auto& text : lines) gens.push_back(parse_monomial(text, vars));
  return MonomialIdeal(vars, gens, b);
}

MonomialIdeal MonomialIdeal::parse_string(const std::string& text, const Budgets& b) {
  std::istringstream in(text);
  return parse(in, b);
}

MonomialIdeal MonomialIdeal::parse_file(const std::string& path, const Budgets& b) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open ideal file: " + path);
  return parse(in, b);
}

std::string MonomialIdeal::digest() const {
  std::string out;
  for (const auto& g : gens_) {
    if (!out.empty()) out += ";";
    out += monomial_to_string(g, vars_);
  }
  if (out.empty()) out = "0";
  return out;
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  int n = g.vertex_count();
  for (const auto& [i, j] : g.edges()) {
    Monomial m = mono_one(n);
    m.exps[static_cast<size_t>(i)] = 1;
    m.exps[static_cast<size_t>(j)] = 1;
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(g.vertices(), gens);
}

std::optional<MonomialIdeal> PowerCache::lookup(const MonomialIdeal& base, int s) const {
  auto it = map_.find(base.digest() + "@" + std::to_string(s));
  if (it == map_.end()) return std::nullopt;
  if (it->second.ring_vars() != base.ring_vars()) return std::nullopt;
  return it->second;
}

void PowerCache::store(const MonomialIdeal& base, int s, const MonomialIdeal& result) {
  map_.emplace(base.digest() + "@" + std::to_string(s), result);
}

MonomialIdeal power(const MonomialIdeal& i, int s, PowerCache* cache, const Budgets& b) {
  if (s < 1) throw Error("power requires s >= 1");
  if (cache) {
    if (auto hit = cache->lookup(i, s)) return *hit;
  }
  MonomialIdeal acc = i;
  for (int k = 2; k <= s; ++k) {
    if (cache) {
      if (auto hit = cache->lookup(i, k)) {
        acc = *hit;
        continue;
      }
    }
    long raw_count = static_cast<long>(acc.gens().size()) * static_cast<long>(i.gens().size());
    if (raw_count > b.max_raw_generators)
      throw BudgetExceeded("max_raw_generators: power expansion needs " +
                           std::to_string(raw_count) + " raw products, budget " +
                           std::to_string(b.max_raw_generators));
    std::vector<Monomial> raw;
    raw.reserve(static_cast<size_t>(raw_count));
    for (const auto& a : acc.gens())
      for (const auto& c : i.gens()) raw.push_back(mono_mul(a, c));
    acc = MonomialIdeal(i.ring_vars(), std::move(raw), b);
    if (cache) cache->store(i, k, acc);
  }
  if (cache) cache->store(i, s, acc);
  return acc;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& i, const Monomial& m) {
  if (m.exps.size() != i.ring_vars().size())
    throw RingMismatch("colon divisor arity does not match ring");
  std::vector<Monomial> raw;
  for (const auto& g : i.gens()) raw.push_back(mono_div(g, mono_gcd(g, m)));
  return MonomialIdeal(i.ring_vars(), raw);
}

int PolarizationMap::base_of(int polarized_index) const {
  for (const auto& [key, idx] : forward)
    if (idx == polarized_index) return key.first;
  throw Error("polarized index not in map");
}

PolarizedIdeal polarize(const MonomialIdeal& i, const Budgets& b) {
  int n = i.nvars();
  std::vector<int> max_exp(static_cast<size_t>(n), 0);
  for (const auto& g : i.gens())
    for (int v = 0; v < n; ++v)
      max_exp[static_cast<size_t>(v)] =
          std::max(max_exp[static_cast<size_t>(v)], g.exps[static_cast<size_t>(v)]);

  PolarizationMap map;
  map.base_vars = i.ring_vars();
  // originals first (occurrence 1 keeps the base name), partners appended in
  // (ring index, occurrence) order
  for (int v = 0; v < n; ++v) {
    map.forward[{v, 1}] = v;
    map.polarized_vars.push_back(i.ring_vars()[static_cast<size_t>(v)]);
  }
  for (int v = 0; v < n; ++v) {
    for (int j = 2; j <= max_exp[static_cast<size_t>(v)]; ++j) {
      std::string name = i.ring_vars()[static_cast<size_t>(v)] + "#" + std::to_string(j);
      map.forward[{v, j}] = static_cast<int>(map.polarized_vars.size());
      map.polarized_vars.push_back(name);
    }
  }
  check_ring(map.polarized_vars, b);

  int np = static_cast<int>(map.polarized_vars.size());
  std::vector<Monomial> gens;
  for (const auto& g : i.gens()) {
    Monomial m = mono_one(np);
    for (int v = 0; v < n; ++v)
      for (int j = 1; j <= g.exps[static_cast<size_t>(v)]; ++j)
        m.exps[static_cast<size_t>(map.forward.at({v, j}))] = 1;
    gens.push_back(std::move(m));
  }
  return PolarizedIdeal{MonomialIdeal(map.polarized_vars, gens, b), map};
}

MonomialIdeal depolarize(const MonomialIdeal& i, const PolarizationMap& map) {
  if (i.ring_vars() != map.polarized_vars)
    throw RingMismatch("ideal is not in the polarized ring of this map");
  int n = static_cast<int>(map.base_vars.size());
  std::vector<Monomial> gens;
  for (const auto& g : i.gens()) {
    Monomial m = mono_one(n);
    for (size_t p = 0; p < g.exps.size(); ++p) {
      if (g.exps[p] == 0) continue;
      m.exps[static_cast<size_t>(map.base_of(static_cast<int>(p)))] += g.exps[p];
    }
    gens.push_back(std::move(m));
  }
  return MonomialIdeal(map.base_vars, gens);
}

bool is_squarefree(const MonomialIdeal& i) {
  for (const auto& g : i.gens())
    if (!g.squarefree()) return false;
  return true;
}

bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring_vars() != b.ring_vars())
    throw RingMismatch("ideal comparison across different rings");
  return a.gens() == b.gens();
}

bool ideal_equal_renamed(const MonomialIdeal& a, const MonomialIdeal& b,
                         const std::map<std::string, std::string>& rename_b) {
  std::vector<std::string> renamed;
  for (const auto& v : b.ring_vars()) {
    auto it = rename_b.find(v);
    renamed.push_back(it == rename_b.end() ? v : it->second);
  }
  // express b's generators in a's ring
  std::vector<Monomial> moved;
  for (const auto& g : b.gens()) {
    Monomial m = mono_one(a.nvars());
    for (size_t v = 0; v < renamed.size(); ++v) {
      if (g.exps[v] == 0) continue;
      m.exps[static_cast<size_t>(a.var_index(renamed[v]))] += g.exps[v];
    }
    moved.push_back(std::move(m));
  }
  MonomialIdeal b_in_a(a.ring_vars(), moved);
  return a.gens() == b_in_a.gens();
}

}  // namespace edgereg
