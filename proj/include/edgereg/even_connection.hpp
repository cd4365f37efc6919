#ifndef EDGEREG_EVEN_CONNECTION_HPP
#define EDGEREG_EVEN_CONNECTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edgereg/config.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/vwc.hpp"

namespace edgereg {

// Ordered list of edges e_1..e_s of a base graph, repetition allowed.
struct EdgeProduct {
  Graph base;
  std::vector<std::pair<int, int>> edges;  // index pairs, smaller index first

  int s() const { return static_cast<int>(edges.size()); }
  Monomial product_monomial() const;  // over the base ring
  std::string to_string() const;      // "u-v,u-v" syntax
};

// Validates that every pair names an edge and s >= 1.
EdgeProduct make_edge_product(
    const Graph& g, const std::vector<std::pair<std::string, std::string>>& edges);

// "u-v,u-v" syntax; a token must split at exactly one '-' into two known
// vertex names, so names containing '-' stay usable as long as the split is
// unambiguous.
EdgeProduct parse_edge_product(const Graph& g, const std::string& text);

// Walk p_0..p_{2k+1}, k >= 1: steps alternate plain edges of the base graph
// with product edges, starting and ending on a plain step.  odd_steps[l] is
// the index into product.edges consumed by the l-th product step, each index
// used at most once.
struct WitnessPath {
  std::vector<int> vertices;
  std::vector<int> odd_steps;

  int k() const { return static_cast<int>(odd_steps.size()); }
  std::vector<std::string> names(const Graph& g) const;
};

// Re-validation from the definition, sharing nothing with the search.  Fills
// *why with the violated condition when given.
bool witness_valid(const EdgeProduct& p, const std::string& u, const std::string& v,
                   const WitnessPath& w, std::string* why = nullptr);

// Shortest witness, ties broken by name-lexicographic vertex sequence.
// Endpoints may coincide.  nullopt when no walk exists.
std::optional<WitnessPath> is_even_connected(const EdgeProduct& p,
                                             const std::string& u,
                                             const std::string& v);

// Every walk for the pair, ordered by length then vertex sequence.  Each
// explored partial walk counts against max_walks.
std::vector<WitnessPath> all_even_connection_walks(const EdgeProduct& p,
                                                   const std::string& u,
                                                   const std::string& v,
                                                   const Budgets& b = budgets());

// (I(G)^{s+1} : e_1...e_s) assembled combinatorially: one generator uv per
// edge and per even-connected pair, u = v contributing u^2.
MonomialIdeal colon_ideal_by_even_connections(const EdgeProduct& p);

// Polarized colon ideal viewed as a graph: original vertices plus one
// partner "u#2" per self-connected vertex u.
struct ColonGraph {
  Graph gprime;
  std::vector<std::string> self_loops;  // base vertices even-connected to themselves
  EdgeProduct origin;
  MonomialIdeal colon;       // over the base ring
  PolarizedIdeal polarized;  // squarefree image defining gprime
};

ColonGraph colon_graph(const EdgeProduct& p);

// Checks (I^{s+1}:e_1...e_s) = ((I^2:e_i)^s : prod_{j!=i} e_j) by monomial
// arithmetic.  i is 1-based.  NotSquarefree when the left side is not
// squarefree.
bool verify_colon_decomposition(const EdgeProduct& p, int i);

// Colon graph of a very well-covered graph stays very well-covered when the
// colon ideal is squarefree.  NotVeryWellCovered / NotSquarefree on failed
// preconditions.
bool verify_gprime_vwc(const Graph& g, const EdgeProduct& p);

struct LemmaCheck {
  std::string name;
  bool pass = true;
  long instances = 0;
  std::string counterexample;  // first failing instance, empty when pass
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;

  bool all_pass() const;
  const LemmaCheck& check(const std::string& name) const;
};

// Exhaustive instantiation of five structural properties of the colon graph
// of a labeled very well-covered graph:
//   pair_step_closure          adjacency propagates through a labeled pair
//   walk_neighbor_absorption   neighbors of walk vertices attach to an endpoint
//   self_loop_closure          neighborhoods around a self-connected pair fill in
//   deletion_localization      removing N[y] localizes the colon graph
//   pair_deletion_localization same for N[x_i] united with N[y_i]
LemmaReport verify_structural_lemmas(const Graph& g, const VwcLabeling& l,
                                     const EdgeProduct& p,
                                     const Budgets& b = budgets());

}  // namespace edgereg

#endif
