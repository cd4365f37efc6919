#ifndef EDGEREG_HOMOLOGY_HPP
#define EDGEREG_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edgereg/config.hpp"
#include "edgereg/monomial.hpp"

namespace edgereg {

// Coefficient field for homology: exact rationals or a prime field.
struct Field {
  bool rational = true;
  int p = 0;

  static Field rationals() { return Field{true, 0}; }
  static Field gf(int prime);  // throws ParseError unless prime

  std::string to_string() const;  // "rationals" or "gf(p)"

  bool operator==(const Field& rhs) const {
    return rational == rhs.rational && p == rhs.p;
  }
  bool operator!=(const Field& rhs) const { return !(*this == rhs); }
};

// Accepts "rationals" or "gf(p)" with p prime.
Field parse_field(const std::string& text);

// Sparse integer matrix as columns of (row, value) entries, rows in [0, nrows).
using SparseColumns = std::vector<std::vector<std::pair<int, long>>>;

// Exact rank over the chosen field.  The rational path eliminates over the
// integers with overflow checks and reruns on arbitrary precision integers
// if 64 bits ever overflow, so the result is always exact.
long matrix_rank(const SparseColumns& cols, int nrows, const Field& f);

// Signed boundary matrix between two consecutive face layers.  lower holds
// the size-k faces and upper the size-(k+1) faces, both as ascending sorted
// bitmask lists; column j expands upper[j] with sign (-1)^i at the face
// obtained by deleting its i-th smallest vertex.  Throws if a required face
// is missing from lower.
SparseColumns boundary_matrix(const std::vector<uint64_t>& lower,
                              const std::vector<uint64_t>& upper);

// Asserts that consecutive boundary matrices compose to zero.
void assert_boundary_squared(const SparseColumns& lower_map,
                             const SparseColumns& upper_map);

// Complex over an ordered ground set of at most 64 vertices, stored by its
// facets.  The void complex has no facets; the complex {∅} has the single
// facet 0.  Construction drops dominated and duplicate facets.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::vector<uint64_t> facets;

  SimplicialComplex() = default;
  SimplicialComplex(std::vector<std::string> verts,
                    std::vector<uint64_t> raw_facets);

  bool is_void() const { return facets.empty(); }
  bool is_empty_complex() const {
    return facets.size() == 1 && facets[0] == 0;
  }
  // -2 for the void complex, -1 for {∅}, else max facet size minus one.
  int dim() const;
  bool has_face(uint64_t sigma) const;
  // Restriction Δ|_σ on the same ground list.
  SimplicialComplex induced(uint64_t sigma) const;
};

// Faces are the subsets of the ring variables whose product no generator
// divides; for an edge ideal this is the independence complex.  The zero
// ideal gives the full simplex.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& i,
                                          const Budgets& b = budgets());

// Reduced homology ranks, slot d+1 holding dim H~_d starting at d = -1.
// Returns an empty vector for the void complex.  Asserts that boundaries
// square to zero and that the alternating rank sum matches the reduced
// Euler characteristic from face counts.
std::vector<long> reduced_homology_ranks(const SimplicialComplex& c,
                                         const Field& f,
                                         const Budgets& b = budgets());

}  // namespace edgereg

#endif
