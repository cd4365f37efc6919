#ifndef EDGEREG_MONOMIAL_HPP
#define EDGEREG_MONOMIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edgereg/config.hpp"
#include "edgereg/graph.hpp"

namespace edgereg {

// Exponent vector against an ambient variable list carried by the ideal or
// passed alongside.  Plain data; helpers below.
struct Monomial {
  std::vector<int> exps;

  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool squarefree() const;
  uint64_t support() const;
  bool divides(const Monomial& other) const;

  bool operator==(const Monomial& rhs) const { return exps == rhs.exps; }
  bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }
};

Monomial mono_one(int nvars);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // exact, a/b

// degrevlex, comparing degree first, ties by the last differing exponent
// (smaller exponent there wins).  Returns <0, 0, >0.
int degrevlex_cmp(const Monomial& a, const Monomial& b);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

// Monomial ideal with an ordered ambient variable list.  Generators are kept
// inclusion-minimal and sorted (degrevlex ascending), so equal ideals have
// identical representations.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Minimalizes raw generators (unit generators allowed: the ideal is then
  // the unit ideal and its single generator is 1).
  MonomialIdeal(std::vector<std::string> ring_vars, std::vector<Monomial> raw,
                const Budgets& b = budgets());

  const std::vector<std::string>& ring_vars() const { return vars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return !gens_.empty() && gens_[0].is_one(); }
  int var_index(const std::string& name) const;  // throws UnknownVertex

  // membership: some generator divides m
  bool contains(const Monomial& m) const;

  int max_degree() const;

  // One line per generator, "x1^2*y3" style, preceded by a "# ring: ..."
  // declaration so emission round-trips exactly.
  void emit(std::ostream& out) const;
  std::string to_text() const;
  static MonomialIdeal parse(std::istream& in, const Budgets& b = budgets());
  static MonomialIdeal parse_string(const std::string& text, const Budgets& b = budgets());
  static MonomialIdeal parse_file(const std::string& path, const Budgets& b = budgets());

  // Canonical one-line digest: generators joined by ';' in storage order.
  std::string digest() const;

  bool operator==(const MonomialIdeal& rhs) const {
    return vars_ == rhs.vars_ && gens_ == rhs.gens_;
  }
  bool operator!=(const MonomialIdeal& rhs) const { return !(*this == rhs); }

 private:
  std::vector<std::string> vars_;
  std::vector<Monomial> gens_;
};

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars);

// I(G): generator x_u x_v per edge, ring = vertex list of G.
MonomialIdeal edge_ideal(const Graph& g);

// Cache for repeated power computations, keyed by (ring, digest, exponent).
class PowerCache {
 public:
  std::optional<MonomialIdeal> lookup(const MonomialIdeal& base, int s) const;
  void store(const MonomialIdeal& base, int s, const MonomialIdeal& result);

 private:
  std::map<std::string, MonomialIdeal> map_;
};

// I^s by repeated product + minimalization; raw product size is budgeted.
MonomialIdeal power(const MonomialIdeal& i, int s, PowerCache* cache = nullptr,
                    const Budgets& b = budgets());

// (I : m) via generator quotients u / gcd(u, m), minimalized.  This is the
// brute-force colon used as the oracle elsewhere.
MonomialIdeal colon_by_monomial(const MonomialIdeal& i, const Monomial& m);

struct PolarizationMap {
  std::vector<std::string> base_vars;
  std::vector<std::string> polarized_vars;
  // (base var index, occurrence j >= 1) -> polarized var index
  std::map<std::pair<int, int>, int> forward;

  // polarized var index -> base var index
  int base_of(int polarized_index) const;
};

struct PolarizedIdeal {
  MonomialIdeal ideal;
  PolarizationMap map;
};

// Occurrence splitting x^a -> x * x#2 * ... * x#a.  Occurrence 1 keeps the
// base name; partners sort behind their base in the new ambient ring.
PolarizedIdeal polarize(const MonomialIdeal& i, const Budgets& b = budgets());

// Inverse on variables (drops "#j"); used for tests and reports.
MonomialIdeal depolarize(const MonomialIdeal& i, const PolarizationMap& map);

bool is_squarefree(const MonomialIdeal& i);

// Requires identical ring variable lists, else RingMismatch.
bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b);

// Equality after renaming b's variables through the given map (b name -> a
// name); names absent from the map stay as-is.
bool ideal_equal_renamed(const MonomialIdeal& a, const MonomialIdeal& b,
                         const std::map<std::string, std::string>& rename_b);

}  // namespace edgereg

#endif
