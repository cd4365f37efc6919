#ifndef EDGEREG_VWC_HPP
#define EDGEREG_VWC_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgereg/config.hpp"
#include "edgereg/graph.hpp"

namespace edgereg {

// Pairing of a very well-covered graph: 2h vertices split into a minimal
// vertex cover X = {x_1..x_h} and a maximal independent set Y = {y_1..y_h}
// with {x_i, y_i} an edge for every i.
struct VwcLabeling {
  std::vector<std::pair<std::string, std::string>> pairs;  // (x_i, y_i)

  int h() const { return static_cast<int>(pairs.size()); }
  std::vector<std::string> cover() const;        // x side
  std::vector<std::string> independent() const;  // y side
};

// Structural validation of a labeling against G: partition of V, pairs are
// edges, X a minimal cover, Y a maximal independent set.  Throws
// InvalidLabeling with the reason on failure.
void validate_labeling(const Graph& g, const VwcLabeling& l);

// All maximal independent sets have the same size.  Empty graph: true.
bool is_well_covered(const Graph& g);

// Well-covered, no isolated vertices, |V| even and >= 2, and the minimum
// vertex cover uses exactly half the vertices.
bool is_very_well_covered(const Graph& g);

// Deterministic labeling: among minimal covers admitting a perfect matching
// onto their complement, the lexicographically smallest X (as a sorted name
// list), then the lexicographically smallest pairing (y-partners read along
// sorted X).  Throws NotVeryWellCovered.
VwcLabeling vwc_labeling(const Graph& g);

// Condition scan of the pair structure: (1) {z_i,x_j},{y_j,x_k} in E forces
// {z_i,x_k} in E for distinct i,j,k and z_i in {x_i,y_i}; (2) {x_i,y_j} in E
// forces {x_i,x_j} not in E.  Pre: l structurally valid (InvalidLabeling).
bool check_vwc_characterization(const Graph& g, const VwcLabeling& l);

// Swap relabeling driven by N(x_i) \ X = {y_j : j in J}: pairs in J flip
// roles (x_j', y_j') = (y_j, x_j).  i is a 0-based pair index.
VwcLabeling relabel_swap(const Graph& g, const VwcLabeling& l, int i);

struct LabeledGraph {
  Graph graph;
  VwcLabeling labeling;
};

// Exhaustive family on {x1..xh, y1..yh}: the perfect matching {x_i,y_i}
// plus every subset of candidate edges {x_i,x_j} and {x_i,y_j} passing the
// characterization conditions.  dedup_isomorphic keeps one representative
// per isomorphism class (canonical-form dedup).  Deterministic order.
std::vector<LabeledGraph> vwc_family_exhaustive(int h, bool dedup_isomorphic,
                                                const Budgets& b = budgets());

// Random members of the same family: subsets sampled from a seeded engine,
// filtered by the same conditions, first `count` accepted.
std::vector<LabeledGraph> vwc_family_random(int h, uint64_t seed, int count,
                                            const Budgets& b = budgets());

enum class FamilyMode { Exhaustive, Random };

// Convenience facade dispatching on mode.
std::vector<LabeledGraph> generate_vwc_family(int h, FamilyMode mode, uint64_t seed,
                                              int count = 0,
                                              bool dedup_isomorphic = true,
                                              const Budgets& b = budgets());

}  // namespace edgereg

#endif
