#ifndef EDGEREG_HARNESS_HPP
#define EDGEREG_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgereg/config.hpp"
#include "edgereg/even_connection.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/homology.hpp"
#include "edgereg/vwc.hpp"

namespace edgereg {

enum class SweepFamily {
  ExhaustiveVwc,      // "exhaustive-vwc"
  Whiskered,          // "whiskered"
  UnmixedBipartite,   // "unmixed-bipartite"
  Join,               // "join"
  RandomGraph,        // "random-graph"
  Fixture,            // "fixture"
};

SweepFamily parse_family(const std::string& name);  // ParseError on junk
std::string family_name(SweepFamily f);

struct SweepConfig {
  SweepFamily family = SweepFamily::ExhaustiveVwc;
  int h = 2;        // pair budget for generated families
  int n = 6;        // vertex budget for random graphs
  int s_max = 1;
  int samples = 0;  // random modes
  uint64_t seed = 0;
  bool have_seed = false;  // random modes refuse to run without one
  Field field = Field::rationals();
  bool zero_millis = false;
};

// ParseError on inconsistent configs (missing seed or sample count for the
// random family, s_max < 1); BudgetExceeded when h or n exceeds the caps.
void validate_sweep_config(const SweepConfig& config, const Budgets& b = budgets());

// One checked statement instance.  For equality statements pass means
// expected == computed; for bound statements pass means computed <=
// expected; purely observational rows set expected = -1 and pass = true.
struct VerificationRecord {
  std::string statement;
  std::string graph;  // graph_digest of the instance
  int s = 0;
  int nu = 0;       // the matching number entering `expected`
  int expected = 0;
  int computed = 0;
  bool pass = false;
  long millis = 0;
};

// For s = 1..s_max, checks reg(I(G)^s) == 2s + nu(G) - 1.  Records are
// appended as they complete, so partial results survive a BudgetExceeded.
// NotVeryWellCovered on inputs outside the theorem.
void verify_main_theorem(const Graph& g, int s_max,
                         std::vector<VerificationRecord>* out,
                         const Field& field = Field::rationals(),
                         const Budgets& b = budgets());

// Per product e_1..e_s: reg((I^{s+1}:e_1...e_s)) <= nu(G) + 1 (statement
// "colon-bound").  When the colon ideal is squarefree, an additional
// "colon-sqfree" record checks equality with nu(G') + 1 and that G' is very
// well-covered.
void verify_colon_bound(const Graph& g, const std::vector<EdgeProduct>& products,
                        std::vector<VerificationRecord>* out,
                        const Field& field = Field::rationals(),
                        const Budgets& b = budgets());

// Family formulas: whiskered graphs ("whisker", any base graph), unmixed
// bipartite graphs ("unmixed-bipartite"), joins of very well-covered graphs
// ("join"), each against reg = 2s + nu - 1 with the family's nu.
void verify_special_families(const SweepConfig& config,
                             std::vector<VerificationRecord>* out,
                             const Budgets& b = budgets());

// The fixed 9-vertex well-covered but not very well-covered graph:
// is_well_covered, !is_very_well_covered, nu = 2, and reg(I^s) = 2s + 2 for
// s in {1, 2} (exceeding the very well-covered formula by one).
void verify_counterexample_boundary(std::vector<VerificationRecord>* out,
                                    const Field& field = Field::rationals(),
                                    const Budgets& b = budgets());

// Random (G, product) samples: the even-connection colon must equal the
// brute-force colon and be generated in degree exactly 2 (statement
// "colon-differential", expected = computed = max generator degree).
void differential_colon_sweep(const SweepConfig& config,
                              std::vector<VerificationRecord>* out,
                              const Budgets& b = budgets());

// ---- sweep driver --------------------------------------------------------

struct SweepOutcome {
  std::vector<VerificationRecord> records;
  bool all_pass = true;
  // minimal failing instance as re-ingestable graph text with "# statement:"
  // and optional "# product:" comment lines; empty when all_pass
  std::string regression;
};

// Dispatches on config.family, stops at the first failing statement, shrinks
// its instance greedily, and serializes it into `regression`.
SweepOutcome run_sweep(const SweepConfig& config, const Budgets& b = budgets());

// Greedy minimization: repeatedly drop a single edge (stripping vertices
// that become isolated) while still_fails stays true.  Deterministic:
// first removable edge in edge order wins each round.
Graph shrink_graph(const Graph& g,
                   const std::function<bool(const Graph&)>& still_fails);

// Same idea for products: drop factors one at a time.
EdgeProduct shrink_product(const EdgeProduct& p,
                           const std::function<bool(const EdgeProduct&)>& still_fails);

std::string regression_text(const std::string& statement, const Graph& g,
                            const EdgeProduct* product);

// ---- output --------------------------------------------------------------

// Header "statement,graph,s,nu,expected,computed,pass,millis"; pass is
// true/false; zero_millis pins the last column to 0 for byte-identical
// reruns.
std::string records_to_csv(const std::vector<VerificationRecord>& records,
                           bool zero_millis);

nlohmann::ordered_json records_to_json(
    const std::vector<VerificationRecord>& records, bool zero_millis);

// ---- fixtures ------------------------------------------------------------

struct Fixture {
  std::string name;
  Graph graph;
};

// c4, c5, gex, gb, boundary9, wc4 — the reference instances, in this order.
// The files shipped under fixtures/ parse to exactly these graphs.
const std::vector<Fixture>& shipped_fixtures();

}  // namespace edgereg

#endif
