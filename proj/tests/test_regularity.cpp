#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <set>
#include <vector>

#include "edgereg/errors.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/regularity.hpp"

using namespace edgereg;

namespace {

Graph c4() { return Graph::parse_string("x1 x2\nx2 x3\nx3 x4\nx1 x4\n"); }

Graph c5() {
  return Graph::parse_string("x1 x2\nx2 x3\nx3 x4\nx4 x5\nx1 x5\n");
}

Graph g_ex() {
  return Graph::parse_string(
      "x1 y1\nx2 y2\nx3 y3\nx4 y4\nx1 x2\nx1 x4\nx1 y3\nx2 y3\nx2 x4\n"
      "x3 x4\n");
}

Graph boundary9() {
  return Graph::parse_string(
      "x1 x2\nx2 x3\nx3 x4\nx4 x5\nx5 x1\nx1 x6\nx6 x9\nx6 x7\nx7 x8\n");
}

MonomialIdeal ideal_of(const std::string& text) {
  return MonomialIdeal::parse_string(text);
}

MonomialIdeal random_squarefree(std::mt19937_64* rng, int nvars, int ngens) {
  std::vector<std::string> vars;
  for (int v = 0; v < nvars; ++v) vars.push_back("v" + std::to_string(v));
  std::vector<Monomial> gens;
  for (int g = 0; g < ngens; ++g) {
    Monomial m = mono_one(nvars);
    int size = 1 + static_cast<int>((*rng)() % 3);
    for (int t = 0; t < size; ++t)
      m.exps[static_cast<size_t>((*rng)() % nvars)] = 1;
    gens.push_back(m);
  }
  return MonomialIdeal(vars, gens);
}

MonomialIdeal random_nonsquarefree(std::mt19937_64* rng, int nvars,
                                   int ngens) {
  std::vector<std::string> vars;
  for (int v = 0; v < nvars; ++v) vars.push_back("v" + std::to_string(v));
  std::vector<Monomial> gens;
  for (int g = 0; g < ngens; ++g) {
    Monomial m = mono_one(nvars);
    int size = 1 + static_cast<int>((*rng)() % 3);
    for (int t = 0; t < size; ++t)
      m.exps[static_cast<size_t>((*rng)() % nvars)] += 1;
    gens.push_back(m);
  }
  return MonomialIdeal(vars, gens);
}

// stanley-reisner ideal of an explicit facet list, via brute-force minimal
// nonfaces; used to freeze a field-dependent example
MonomialIdeal ideal_of_facets(const std::vector<std::string>& vertices,
                              const std::vector<uint64_t>& facets) {
  int n = static_cast<int>(vertices.size());
  std::vector<Monomial> gens;
  for (uint64_t s = 1; s < (uint64_t{1} << n); ++s) {
    bool face = false;
    for (uint64_t f : facets)
      if ((s & ~f) == 0) face = true;
    if (face) continue;
    bool minimal = true;
    uint64_t rest = s;
    while (rest) {
      uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      uint64_t sub = s ^ bit;
      bool subface = false;
      for (uint64_t f : facets)
        if ((sub & ~f) == 0) subface = true;
      if (!subface) minimal = false;
    }
    if (!minimal) continue;
    Monomial m = mono_one(n);
    for (int v = 0; v < n; ++v)
      if ((s >> v) & 1) m.exps[static_cast<size_t>(v)] = 1;
    gens.push_back(m);
  }
  return MonomialIdeal(vertices, gens);
}

}  // namespace

TEST_CASE("a principal quadratic ideal has regularity two") {
  RegularityReport r = regularity_squarefree(ideal_of("# ring: a b\na*b\n"));
  CHECK(r.reg == 2);
  CHECK(r.method == "hochster");
  CHECK(r.ideal == "a*b");
  CHECK(!r.polarized);
  CHECK(!r.witnesses_truncated);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0] ==
        RegularityWitness{std::vector<std::string>{"a", "b"}, 0});
  CHECK(report_to_json(r).dump() ==
        "{\"ideal\":\"a*b\",\"reg\":2,\"method\":\"hochster\","
        "\"field\":\"rationals\",\"witnesses\":[{\"sigma\":[\"a\",\"b\"],"
        "\"dim\":0}]}");
}

TEST_CASE("unused ring variables do not change regularity") {
  CHECK(regularity_squarefree(ideal_of("# ring: a b c\na*b\n")).reg == 2);
}

TEST_CASE("linear ideals have regularity one") {
  CHECK(regularity_squarefree(ideal_of("# ring: a b\na\n")).reg == 1);
  CHECK(regularity_squarefree(ideal_of("# ring: a b\na\nb\n")).reg == 1);
}

TEST_CASE("edge ideal of the square") {
  MonomialIdeal i = edge_ideal(c4());
  RegularityReport r = regularity_squarefree(i);
  CHECK(r.reg == 2);
  // ties: the full vertex set, four triples, four edge supports
  CHECK(r.witnesses.size() == 9);
  CHECK(r.witnesses[0].sigma ==
        std::vector<std::string>{"x1", "x2", "x3", "x4"});
  for (const auto& w : r.witnesses) CHECK(w.dim == 0);
  CHECK(verify_report_witnesses(i, r));
}

TEST_CASE("edge ideal of the pentagon") {
  MonomialIdeal i = edge_ideal(c5());
  for (Field f : {Field::rationals(), Field::gf(2)}) {
    RegularityReport r = regularity_squarefree(i, f);
    CHECK(r.reg == 3);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0] == RegularityWitness{
        std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"}, 1});
    CHECK(verify_report_witnesses(i, r));
  }
}

TEST_CASE("very well-covered example matches the matching bound") {
  Graph g = g_ex();
  RegularityReport r = regularity_squarefree(edge_ideal(g));
  CHECK(r.reg == induced_matching_number(g) + 1);
}

TEST_CASE("regularity polarizes squares away") {
  RegularityReport r = regularity(ideal_of("# ring: a\na^2\n"));
  CHECK(r.reg == 2);
  CHECK(r.polarized);
  CHECK(r.ideal == "a^2");
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0] ==
        RegularityWitness{std::vector<std::string>{"a", "a#2"}, 0});
  MonomialIdeal pol = polarize(ideal_of("# ring: a\na^2\n")).ideal;
  CHECK(verify_report_witnesses(pol, r));
}

TEST_CASE("square of the square's edge ideal") {
  MonomialIdeal i2 = power(edge_ideal(c4()), 2);
  RegularityReport r = regularity(i2);
  CHECK(r.reg == 4);
  CHECK(r.polarized);
}

TEST_CASE("nine-vertex boundary example at s = 1") {
  RegularityReport r = regularity(edge_ideal(boundary9()));
  CHECK(r.reg == 4);
  CHECK(!r.polarized);
}

TEST_CASE("mixed-degree and disjoint-support ideals") {
  for (const char* text : {"# ring: a b c d\na\nb*c*d\n",
                           "# ring: a b c d\na*b\nc*d\n"}) {
    MonomialIdeal i = ideal_of(text);
    CHECK(regularity_squarefree(i).reg == 3);
    CHECK(regularity_lcm_lattice(i).reg == 3);
  }
}

TEST_CASE("lcm-lattice method on small ideals") {
  RegularityReport r = regularity_lcm_lattice(ideal_of("# ring: a b\na*b\n"));
  CHECK(r.reg == 2);
  CHECK(r.method == "lcm-lattice");
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0] ==
        RegularityWitness{std::vector<std::string>{"a", "b"}, -1});
  CHECK(verify_report_witnesses(ideal_of("# ring: a b\na*b\n"), r));

  MonomialIdeal c5i = edge_ideal(c5());
  RegularityReport lcm = regularity_lcm_lattice(c5i);
  CHECK(lcm.reg == 3);
  CHECK(verify_report_witnesses(c5i, lcm));
  CHECK(lcm.reg == regularity_squarefree(c5i).reg);
}

TEST_CASE("methods agree on random squarefree ideals") {
  std::mt19937_64 rng(77);
  int done = 0;
  while (done < 40) {
    MonomialIdeal i = random_squarefree(&rng, 4 + static_cast<int>(rng() % 3),
                                        1 + static_cast<int>(rng() % 6));
    if (i.is_zero() || i.is_unit()) continue;
    ++done;
    Field f = done % 5 == 0 ? Field::gf(2) : Field::rationals();
    RegularityReport a = regularity_squarefree(i, f);
    RegularityReport b = regularity_lcm_lattice(i, f);
    CHECK(a.reg == b.reg);
    CHECK(verify_report_witnesses(i, a));
    CHECK(verify_report_witnesses(i, b));
  }
}

TEST_CASE("polarization leaves regularity fixed") {
  std::mt19937_64 rng(1234);
  int done = 0;
  while (done < 25) {
    MonomialIdeal i = random_nonsquarefree(
        &rng, 3 + static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 4));
    if (i.is_zero() || i.is_unit()) continue;
    ++done;
    RegularityReport pol = regularity(i);
    RegularityReport lcm = regularity_lcm_lattice(i);
    CHECK(pol.reg == lcm.reg);
    CHECK(pol.polarized == !is_squarefree(i));
  }
}

TEST_CASE("projective plane ideal separates the fields") {
  MonomialIdeal i = ideal_of_facets(
      {"1", "2", "3", "4", "5", "6"},
      {7, 13, 25, 49, 35, 22, 44, 26, 52, 42});
  RegularityReport rq = regularity_squarefree(i, Field::rationals());
  RegularityReport r2 = regularity_squarefree(i, Field::gf(2));
  CHECK(rq.reg == 3);
  CHECK(r2.reg == 4);
  CHECK(regularity_lcm_lattice(i, Field::rationals()).reg == 3);
  CHECK(regularity_lcm_lattice(i, Field::gf(2)).reg == 4);
  CHECK(verify_report_witnesses(i, rq));
  CHECK(verify_report_witnesses(i, r2));
}

TEST_CASE("regularity dominates the matching lower bound") {
  for (const Graph& g : {c4(), c5(), g_ex(), boundary9()}) {
    int nu = induced_matching_number(g);
    CHECK(regularity(edge_ideal(g)).reg >= 2 + nu - 1);
  }
  for (const Graph& g : {c4(), c5()}) {
    int nu = induced_matching_number(g);
    CHECK(regularity(power(edge_ideal(g), 2)).reg >= 4 + nu - 1);
  }
}

TEST_CASE("degenerate ideals are rejected") {
  CHECK_THROWS_AS(regularity_squarefree(MonomialIdeal({"a"}, {})), ZeroIdeal);
  CHECK_THROWS_AS(regularity(MonomialIdeal({"a"}, {})), ZeroIdeal);
  CHECK_THROWS_AS(regularity_lcm_lattice(MonomialIdeal({"a"}, {})), ZeroIdeal);
  MonomialIdeal unit({"a"}, {mono_one(1)});
  CHECK_THROWS_AS(regularity_squarefree(unit), UnitIdeal);
  CHECK_THROWS_AS(regularity(unit), UnitIdeal);
  CHECK_THROWS_AS(regularity_lcm_lattice(unit), UnitIdeal);
  CHECK_THROWS_AS(regularity_squarefree(ideal_of("# ring: a\na^2\n")),
                  NotSquarefree);
}

TEST_CASE("regularity budgets") {
  Budgets pol_cap;
  pol_cap.max_polarized_vars = 3;
  CHECK_THROWS_AS(
      regularity(power(edge_ideal(c4()), 2), Field::rationals(), pol_cap),
      BudgetExceeded);
  Budgets gen_cap;
  gen_cap.max_lcm_generators = 2;
  CHECK_THROWS_AS(
      regularity_lcm_lattice(edge_ideal(c5()), Field::rationals(), gen_cap),
      BudgetExceeded);
  Budgets lattice_cap;
  lattice_cap.max_lattice_size = 3;
  CHECK_THROWS_AS(
      regularity_squarefree(edge_ideal(c5()), Field::rationals(), lattice_cap),
      BudgetExceeded);
}

TEST_CASE("tampered reports fail verification") {
  MonomialIdeal i = edge_ideal(c5());
  RegularityReport r = regularity_squarefree(i);
  RegularityReport worse = r;
  worse.reg += 1;
  CHECK(!verify_report_witnesses(i, worse));
  RegularityReport shifted = r;
  shifted.witnesses[0].dim += 1;
  CHECK(!verify_report_witnesses(i, shifted));
  RegularityReport hollow = r;
  hollow.witnesses.clear();
  CHECK(!verify_report_witnesses(i, hollow));
  RegularityReport alien = r;
  alien.witnesses[0].sigma[0] = "zz";
  CHECK(!verify_report_witnesses(i, alien));
}

TEST_CASE("reports are deterministic across thread counts") {
  MonomialIdeal i = edge_ideal(g_ex());
  int saved = thread_count();
  set_thread_count(1);
  RegularityReport one = regularity_squarefree(i);
  set_thread_count(4);
  RegularityReport four = regularity_squarefree(i);
  set_thread_count(saved);
  CHECK(one.reg == four.reg);
  CHECK(one.witnesses == four.witnesses);
  CHECK(report_to_json(one).dump() == report_to_json(four).dump());
}
