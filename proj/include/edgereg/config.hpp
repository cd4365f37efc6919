#ifndef EDGEREG_CONFIG_HPP
#define EDGEREG_CONFIG_HPP

#include <cstdint>

namespace edgereg {

// Resource budgets.  Defaults are desk-scale; every limit can be raised or
// lowered through EDGEREG_BUDGET_* environment variables, and CLI flags
// override the environment.  Exceeding a budget throws BudgetExceeded with
// the budget name in the message.
struct Budgets {
  int max_vertices = 32;           // EDGEREG_BUDGET_VERTICES
  int max_canonical_vertices = 10; // EDGEREG_BUDGET_CANONICAL_VERTICES
  long max_raw_generators = 100000;  // EDGEREG_BUDGET_RAW_GENS
  int max_ring_vars = 64;          // EDGEREG_BUDGET_RING_VARS
  int max_polarized_vars = 24;     // EDGEREG_BUDGET_POLY_VARS
  int max_lcm_generators = 24;     // EDGEREG_BUDGET_LCM_GENS
  int max_homology_vertices = 24;  // EDGEREG_BUDGET_HOMOLOGY_VERTS
  int max_family_h = 4;            // EDGEREG_BUDGET_FAMILY_H
  long max_lattice_size = 2000000; // EDGEREG_BUDGET_LATTICE
  long max_faces = 5000000;        // EDGEREG_BUDGET_FACES
  long max_walks = 4000000;        // EDGEREG_BUDGET_WALKS (structural lemma sweeps)

  // Reads EDGEREG_BUDGET_* from the environment on top of the defaults.
  static Budgets from_env();
};

// Process-wide budgets: initialized lazily from the environment, overridable
// once at startup (the CLI does this after flag parsing).
const Budgets& budgets();
void set_budgets(const Budgets& b);

// Worker threads for sweeps and per-subset homology.  EDGEREG_THREADS, else
// hardware concurrency.  Results are merged by index, so thread count never
// affects output.
int thread_count();
void set_thread_count(int n);

}  // namespace edgereg

#endif
