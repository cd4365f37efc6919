#ifndef EDGEREG_REGULARITY_HPP
#define EDGEREG_REGULARITY_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "edgereg/config.hpp"
#include "edgereg/homology.hpp"
#include "edgereg/monomial.hpp"

namespace edgereg {

// One place where the regularity is attained.  For the "hochster" method
// sigma is a set of ring variables (induced subcomplex with homology in
// dimension dim); for the "lcm-lattice" method sigma spells a lattice
// monomial, with each variable repeated per its exponent.
struct RegularityWitness {
  std::vector<std::string> sigma;
  int dim = 0;

  bool operator==(const RegularityWitness& rhs) const {
    return sigma == rhs.sigma && dim == rhs.dim;
  }
};

struct RegularityReport {
  std::string ideal;   // canonical generator digest of the input ideal
  int reg = 0;
  std::string method;  // "hochster" or "lcm-lattice"
  Field field;
  std::vector<RegularityWitness> witnesses;
  // in-memory notes, not part of the JSON shape
  bool polarized = false;            // a polarization step was taken
  bool witnesses_truncated = false;  // tie list hit the reporting cap
};

// Witness lists are capped at this many entries (dense tie sets carry no
// extra information); witnesses_truncated records that the cap was hit.
inline constexpr size_t max_reported_witnesses = 64;

// reg(I) for a squarefree proper nonzero ideal, as reg(R/I)+1, where
// reg(R/I) is the largest d+1 such that some induced subcomplex of the
// Stanley-Reisner complex has nonzero reduced homology in dimension d.
// Only subsets that are unions of generator supports can contribute, so
// the search runs over that lattice.  Throws ZeroIdeal, UnitIdeal,
// NotSquarefree, BudgetExceeded.
RegularityReport regularity_squarefree(const MonomialIdeal& ideal,
                                       const Field& field = Field::rationals(),
                                       const Budgets& b = budgets());

// reg(I) for any proper nonzero monomial ideal: polarize, then delegate to
// the squarefree computation (regularity is invariant under polarization).
// The report keeps the original ideal's digest; witnesses use polarized
// variable names and `polarized` records whether the step changed the ring.
RegularityReport regularity(const MonomialIdeal& ideal,
                            const Field& field = Field::rationals(),
                            const Budgets& b = budgets());

// Independent cross-check: multigraded Betti contributions via the lcm
// lattice of the generators.  For each lattice element b the crosscut
// complex on the generators below b is homotopy equivalent to the order
// complex of the open interval (bottom, b); a nonzero reduced homology rank
// in dimension d contributes deg(b) - (d + 2) to reg(R/I).  Agrees with
// regularity() on every input where both run.
RegularityReport regularity_lcm_lattice(const MonomialIdeal& ideal,
                                        const Field& field = Field::rationals(),
                                        const Budgets& b = budgets());

// Recomputes homology behind every witness of `r` and checks it is nonzero
// and attains r.reg.  `ideal` must be the ideal the report was computed
// from, except for the "hochster" method on a polarized report, where it
// must be the polarized ideal.
bool verify_report_witnesses(const MonomialIdeal& ideal,
                             const RegularityReport& r,
                             const Budgets& b = budgets());

// Exact shape: {"ideal","reg","method","field","witnesses"} with witnesses
// as [{"sigma": [names], "dim": int}].
nlohmann::ordered_json report_to_json(const RegularityReport& r);

}  // namespace edgereg

#endif
