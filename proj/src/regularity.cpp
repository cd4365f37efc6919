#include "edgereg/regularity.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edgereg/errors.hpp"
#include "edgereg/parallel.hpp"

namespace edgereg {

namespace {

// Face layers of one complex plus lazily computed boundary ranks.  For
// rational fields a gf(2) rank doubles as a vanishing screen: by universal
// coefficients the rational betti number is bounded by the gf(2) one, so a
// zero gf(2) betti number certifies rational vanishing without exact
// integer elimination.
class complex_scanner {
 public:
  complex_scanner(std::vector<std::vector<uint64_t>> layers, Field field)
      : layers_(std::move(layers)),
        field_(field),
        mats_(layers_.size()),
        have_mat_(layers_.size(), false),
        rank_exact_(layers_.size(), -1),
        rank_screen_(layers_.size(), -1) {}

  int top_dim() const { return static_cast<int>(layers_.size()) - 2; }

  long faces(int d) const {
    size_t k = static_cast<size_t>(d + 1);
    return k < layers_.size() ? static_cast<long>(layers_[k].size()) : 0;
  }

  long reduced_euler() const {
    long chi = 0;
    for (int d = -1; d <= top_dim(); ++d)
      chi += (d % 2 == 0 ? 1 : -1) * faces(d);
    return chi;
  }

  long h(int d) { return faces(d) - rank_of(d + 1, false) - rank_of(d + 2, false); }

  // gf(2) betti number; zero certifies h(d) == 0 when the field is rational
  long h_screen(int d) {
    return faces(d) - rank_of(d + 1, true) - rank_of(d + 2, true);
  }

  // Alternating rank sums must reproduce the face-count euler
  // characteristic; checked whenever a scan happened to compute every rank.
  void check_euler_if_complete() {
    for (size_t k = 1; k < layers_.size(); ++k)
      if (rank_exact_[k] < 0) return;
    long sum = 0;
    for (int d = -1; d <= top_dim(); ++d)
      sum += (d % 2 == 0 ? 1 : -1) * h(d);
    if (sum != reduced_euler())
      throw Error("internal: euler characteristic mismatch");
  }

 private:
  const SparseColumns& matrix(size_t k) {
    if (!have_mat_[k]) {
      mats_[k] = boundary_matrix(layers_[k - 1], layers_[k]);
      have_mat_[k] = true;
      if (k >= 2 && have_mat_[k - 1])
        assert_boundary_squared(mats_[k - 1], mats_[k]);
      if (k + 1 < mats_.size() && have_mat_[k + 1])
        assert_boundary_squared(mats_[k], mats_[k + 1]);
    }
    return mats_[k];
  }

  // rank of the boundary map from faces of size k to faces of size k-1
  long rank_of(int k, bool screen) {
    if (k <= 0 || k >= static_cast<int>(layers_.size())) return 0;
    size_t i = static_cast<size_t>(k);
    if (!field_.rational && screen)
      throw Error("internal: gf(2) screen outside a rational computation");
    auto& cache = screen ? rank_screen_ : rank_exact_;
    if (cache[i] < 0) {
      Field f = screen ? Field::gf(2) : field_;
      cache[i] = matrix_rank(matrix(i),
                             static_cast<int>(layers_[i - 1].size()), f);
    }
    return cache[i];
  }

  std::vector<std::vector<uint64_t>> layers_;
  Field field_;
  std::vector<SparseColumns> mats_;
  std::vector<char> have_mat_;
  std::vector<long> rank_exact_;
  std::vector<long> rank_screen_;
};

// Faces grouped by size, found by extending each face with universe
// vertices above its highest member; is_face must be downward closed and
// accept the empty set.
template <typename IsFace>
std::vector<std::vector<uint64_t>> build_layers(uint64_t universe,
                                                long max_faces,
                                                IsFace is_face) {
  std::vector<std::vector<uint64_t>> layers{{0}};
  long total = 1;
  while (true) {
    std::vector<uint64_t> next;
    for (uint64_t m : layers.back()) {
      int start = m == 0 ? 0 : 64 - std::countl_zero(m);
      uint64_t rest = start >= 64 ? 0 : (universe >> start) << start;
      while (rest) {
        uint64_t bit = rest & (~rest + 1);
        rest ^= bit;
        if (is_face(m | bit)) next.push_back(m | bit);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    total += static_cast<long>(next.size());
    if (total > max_faces)
      throw BudgetExceeded("max_faces: subcomplex faces exceed " +
                           std::to_string(max_faces));
    layers.push_back(std::move(next));
  }
  return layers;
}

std::vector<uint64_t> union_closure(const std::vector<uint64_t>& supports,
                                    long cap) {
  std::set<uint64_t> closed{0};
  for (uint64_t s : supports) {
    std::vector<uint64_t> add;
    add.reserve(closed.size());
    for (uint64_t t : closed) add.push_back(t | s);
    closed.insert(add.begin(), add.end());
    if (static_cast<long>(closed.size()) > cap)
      throw BudgetExceeded(
          "max_lattice_size: union closure of generator supports exceeds " +
          std::to_string(cap));
  }
  return {closed.begin(), closed.end()};
}

struct scan_result {
  bool found = false;
  int d = 0;
};

// Top homological dimension of the induced subcomplex on sigma with nonzero
// homology, provided its contribution d+1 can reach floor_contrib.
scan_result scan_sigma(const SimplicialComplex& delta, uint64_t sigma,
                       int floor_contrib, const Field& field,
                       const Budgets& b) {
  std::vector<uint64_t> restricted;
  restricted.reserve(delta.facets.size());
  int dmax = -1;
  for (uint64_t f : delta.facets) {
    uint64_t r = f & sigma;
    restricted.push_back(r);
    dmax = std::max(dmax, std::popcount(r) - 1);
  }
  if (dmax + 1 < floor_contrib) return {};
  std::sort(restricted.begin(), restricted.end());
  restricted.erase(std::unique(restricted.begin(), restricted.end()),
                   restricted.end());
  std::vector<uint64_t> maximal;
  for (uint64_t r : restricted) {
    bool dominated = false;
    for (uint64_t o : restricted)
      if (o != r && (r & ~o) == 0) dominated = true;
    if (!dominated) maximal.push_back(r);
  }
  auto is_face = [&maximal](uint64_t m) {
    for (uint64_t r : maximal)
      if ((m & ~r) == 0) return true;
    return false;
  };
  complex_scanner sc(build_layers(sigma, b.max_faces, is_face), field);
  long chi = sc.reduced_euler();
  int low = std::max(floor_contrib - 1, -1);
  scan_result out;
  for (int d = dmax; d >= low; --d) {
    if (field.rational && sc.h_screen(d) == 0) continue;
    if (sc.h(d) != 0) {
      out.found = true;
      out.d = d;
      break;
    }
  }
  // a nonzero reduced euler characteristic certifies some homology, so a
  // full scan that found none is a contradiction
  if (!out.found && low == -1 && chi != 0)
    throw Error("internal: euler screen found homology the rank scan missed");
  sc.check_euler_if_complete();
  return out;
}

std::vector<std::string> names_of_mask(const std::vector<std::string>& vars,
                                       uint64_t mask) {
  std::vector<std::string> out;
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    out.push_back(vars[static_cast<size_t>(v)]);
  }
  return out;
}

void record(std::vector<RegularityWitness>* wits, bool* truncated, int* best,
            int contribution, RegularityWitness w) {
  if (contribution > *best) {
    *best = contribution;
    wits->clear();
    *truncated = false;
    wits->push_back(std::move(w));
  } else if (contribution == *best) {
    if (wits->size() < max_reported_witnesses)
      wits->push_back(std::move(w));
    else
      *truncated = true;
  }
}

}  // namespace

RegularityReport regularity_squarefree(const MonomialIdeal& ideal,
                                       const Field& field, const Budgets& b) {
  if (ideal.is_zero())
    throw ZeroIdeal("regularity of the zero ideal is undefined");
  if (ideal.is_unit())
    throw UnitIdeal("regularity of the unit ideal is undefined");
  if (!is_squarefree(ideal))
    throw NotSquarefree("squarefree regularity needs a squarefree ideal");

  SimplicialComplex delta = stanley_reisner_complex(ideal, b);

  std::vector<uint64_t> supports;
  supports.reserve(ideal.gens().size());
  uint64_t active = 0;
  for (const auto& g : ideal.gens()) {
    supports.push_back(g.support());
    active |= g.support();
  }
  if (std::popcount(active) > b.max_homology_vertices)
    throw BudgetExceeded("max_homology_vertices: " +
                         std::to_string(std::popcount(active)) +
                         " variables appear in generators, cap is " +
                         std::to_string(b.max_homology_vertices));

  std::vector<uint64_t> lattice = union_closure(supports, b.max_lattice_size);
  std::sort(lattice.begin(), lattice.end(), [](uint64_t a, uint64_t c) {
    int pa = std::popcount(a);
    int pc = std::popcount(c);
    if (pa != pc) return pa > pc;
    return a < c;
  });

  // the boundary sphere of a top-degree generator support is always present
  int best = ideal.max_degree() - 1;
  std::vector<RegularityWitness> wits;
  bool truncated = false;

  size_t i = 0;
  while (i < lattice.size()) {
    int k = std::popcount(lattice[i]);
    size_t j = i;
    while (j < lattice.size() && std::popcount(lattice[j]) == k) ++j;
    // a nonempty lattice subset contains a generator support, hence is a
    // nonface, so it contributes at most its size minus one
    if (std::max(0, k - 1) < best) break;
    int floor_contrib = best;
    std::vector<scan_result> results(j - i);
    parallel_for(j - i, [&](size_t t) {
      results[t] = scan_sigma(delta, lattice[i + t], floor_contrib, field, b);
    });
    for (size_t t = 0; t < results.size(); ++t) {
      if (!results[t].found) continue;
      record(&wits, &truncated, &best, results[t].d + 1,
             {names_of_mask(ideal.ring_vars(), lattice[i + t]), results[t].d});
    }
    i = j;
  }

  RegularityReport rep;
  rep.ideal = ideal.digest();
  rep.reg = best + 1;
  rep.method = "hochster";
  rep.field = field;
  rep.witnesses = std::move(wits);
  rep.witnesses_truncated = truncated;
  return rep;
}

RegularityReport regularity(const MonomialIdeal& ideal, const Field& field,
                            const Budgets& b) {
  if (ideal.is_zero())
    throw ZeroIdeal("regularity of the zero ideal is undefined");
  if (ideal.is_unit())
    throw UnitIdeal("regularity of the unit ideal is undefined");
  PolarizedIdeal pol = polarize(ideal, b);
  if (static_cast<int>(pol.ideal.ring_vars().size()) > b.max_polarized_vars)
    throw BudgetExceeded("max_polarized_vars: polarization needs " +
                         std::to_string(pol.ideal.ring_vars().size()) +
                         " variables, cap is " +
                         std::to_string(b.max_polarized_vars));
  RegularityReport rep = regularity_squarefree(pol.ideal, field, b);
  rep.ideal = ideal.digest();
  rep.polarized = pol.ideal.ring_vars() != ideal.ring_vars();
  return rep;
}

RegularityReport regularity_lcm_lattice(const MonomialIdeal& ideal,
                                        const Field& field, const Budgets& b) {
  if (ideal.is_zero())
    throw ZeroIdeal("regularity of the zero ideal is undefined");
  if (ideal.is_unit())
    throw UnitIdeal("regularity of the unit ideal is undefined");
  const std::vector<Monomial>& gens = ideal.gens();
  if (static_cast<int>(gens.size()) > b.max_lcm_generators)
    throw BudgetExceeded("max_lcm_generators: " + std::to_string(gens.size()) +
                         " generators, cap is " +
                         std::to_string(b.max_lcm_generators));

  // lattice of distinct lcms of nonempty generator subsets
  std::vector<Monomial> lattice;
  std::set<std::vector<int>> seen;
  for (const auto& g : gens) {
    std::vector<Monomial> snapshot = lattice;
    std::vector<Monomial> cands;
    cands.reserve(snapshot.size() + 1);
    cands.push_back(g);
    for (const auto& m : snapshot) cands.push_back(mono_lcm(m, g));
    for (auto& c : cands) {
      if (!seen.insert(c.exps).second) continue;
      lattice.push_back(std::move(c));
      if (static_cast<long>(lattice.size()) > b.max_lattice_size)
        throw BudgetExceeded("max_lattice_size: lcm lattice exceeds " +
                             std::to_string(b.max_lattice_size));
    }
  }
  std::sort(lattice.begin(), lattice.end(),
            [](const Monomial& a, const Monomial& c) {
              if (a.degree() != c.degree()) return a.degree() > c.degree();
              return a.exps < c.exps;
            });

  // the R summand contributes homological index 0 in degree 0
  int best = 0;
  std::vector<RegularityWitness> wits;
  bool truncated = false;

  for (const auto& m : lattice) {
    int deg = m.degree();
    // the smallest homological dimension is -1, so deg-1 caps the
    // contribution deg-(d+2) of this element
    if (deg - 1 < best) break;
    std::vector<int> atoms;
    for (size_t g = 0; g < gens.size(); ++g)
      if (gens[g].divides(m)) atoms.push_back(static_cast<int>(g));
    uint64_t universe =
        atoms.size() >= 64 ? ~uint64_t{0} : (uint64_t{1} << atoms.size()) - 1;
    // crosscut complex: atom subsets whose lcm stays below m
    auto is_face = [&](uint64_t mask) {
      Monomial l = mono_one(static_cast<int>(ideal.ring_vars().size()));
      uint64_t rest = mask;
      while (rest) {
        int p = std::countr_zero(rest);
        rest &= rest - 1;
        l = mono_lcm(l, gens[static_cast<size_t>(atoms[static_cast<size_t>(p)])]);
      }
      return !(l == m);
    };
    complex_scanner sc(build_layers(universe, b.max_faces, is_face), field);
    for (int d = -1; d <= sc.top_dim() && deg - (d + 2) >= best; ++d) {
      if (field.rational && sc.h_screen(d) == 0) continue;
      if (sc.h(d) == 0) continue;
      std::vector<std::string> sigma;
      for (size_t v = 0; v < m.exps.size(); ++v)
        for (int e = 0; e < m.exps[v]; ++e)
          sigma.push_back(ideal.ring_vars()[v]);
      record(&wits, &truncated, &best, deg - (d + 2), {std::move(sigma), d});
      break;
    }
    sc.check_euler_if_complete();
  }

  RegularityReport rep;
  rep.ideal = ideal.digest();
  rep.reg = best + 1;
  rep.method = "lcm-lattice";
  rep.field = field;
  rep.witnesses = std::move(wits);
  rep.witnesses_truncated = truncated;
  return rep;
}

bool verify_report_witnesses(const MonomialIdeal& ideal,
                             const RegularityReport& r, const Budgets& b) {
  if (r.witnesses.empty()) return false;
  try {
    if (r.method == "hochster") {
      SimplicialComplex delta = stanley_reisner_complex(ideal, b);
      for (const auto& w : r.witnesses) {
        if (w.dim + 2 != r.reg) return false;
        uint64_t sigma = 0;
        for (const auto& name : w.sigma)
          sigma |= uint64_t{1} << ideal.var_index(name);
        std::vector<long> h =
            reduced_homology_ranks(delta.induced(sigma), r.field, b);
        size_t slot = static_cast<size_t>(w.dim + 1);
        if (slot >= h.size() || h[slot] == 0) return false;
      }
      return true;
    }
    if (r.method == "lcm-lattice") {
      for (const auto& w : r.witnesses) {
        if (static_cast<int>(w.sigma.size()) - w.dim - 1 != r.reg)
          return false;
        Monomial m = mono_one(static_cast<int>(ideal.ring_vars().size()));
        for (const auto& name : w.sigma)
          m.exps[static_cast<size_t>(ideal.var_index(name))] += 1;
        std::vector<int> atoms;
        Monomial join = mono_one(static_cast<int>(ideal.ring_vars().size()));
        for (size_t g = 0; g < ideal.gens().size(); ++g)
          if (ideal.gens()[g].divides(m)) {
            atoms.push_back(static_cast<int>(g));
            join = mono_lcm(join, ideal.gens()[g]);
          }
        if (!(join == m)) return false;  // not a lattice element
        // rebuild the crosscut complex as a named complex and recompute
        uint64_t universe = (uint64_t{1} << atoms.size()) - 1;
        auto is_face = [&](uint64_t mask) {
          Monomial l = mono_one(static_cast<int>(ideal.ring_vars().size()));
          uint64_t rest = mask;
          while (rest) {
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            l = mono_lcm(l,
                         ideal.gens()[static_cast<size_t>(atoms[static_cast<size_t>(p)])]);
          }
          return !(l == m);
        };
        std::vector<std::vector<uint64_t>> layers =
            build_layers(universe, b.max_faces, is_face);
        std::vector<uint64_t> faces;
        for (const auto& layer : layers)
          faces.insert(faces.end(), layer.begin(), layer.end());
        std::vector<std::string> names;
        for (int a : atoms) names.push_back("g" + std::to_string(a));
        SimplicialComplex crosscut(names, faces);
        std::vector<long> h = reduced_homology_ranks(crosscut, r.field, b);
        size_t slot = static_cast<size_t>(w.dim + 1);
        if (slot >= h.size() || h[slot] == 0) return false;
      }
      return true;
    }
  } catch (const UnknownVertex&) {
    return false;
  }
  return false;
}

nlohmann::ordered_json report_to_json(const RegularityReport& r) {
  nlohmann::ordered_json j;
  j["ideal"] = r.ideal;
  j["reg"] = r.reg;
  j["method"] = r.method;
  j["field"] = r.field.to_string();
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) {
    nlohmann::ordered_json e;
    e["sigma"] = w.sigma;
    e["dim"] = w.dim;
    ws.push_back(e);
  }
  j["witnesses"] = ws;
  return j;
}

}  // namespace edgereg
