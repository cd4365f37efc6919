#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgereg/errors.hpp"
#include "edgereg/graph.hpp"
#include "edgereg/harness.hpp"
#include "edgereg/monomial.hpp"
#include "edgereg/regularity.hpp"

using namespace edgereg;

namespace {

// independent induced-matching oracle: subsets of the edge list, a pick is
// induced when every graph edge inside the picked vertex set is picked
int nu_oracle(const Graph& g) {
  std::vector<std::pair<int, int>> edges = g.edges();
  int best = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << edges.size()); ++mask) {
    uint64_t used = 0;
    int count = 0;
    bool ok = true;
    for (size_t t = 0; t < edges.size() && ok; ++t) {
      if (!((mask >> t) & 1)) continue;
      uint64_t em = (uint64_t{1} << edges[t].first) |
                    (uint64_t{1} << edges[t].second);
      if (used & em)
        ok = false;
      else {
        used |= em;
        ++count;
      }
    }
    if (!ok) continue;
    for (size_t t = 0; t < edges.size() && ok; ++t) {
      uint64_t em = (uint64_t{1} << edges[t].first) |
                    (uint64_t{1} << edges[t].second);
      if ((em & used) == em && !((mask >> t) & 1)) ok = false;
    }
    if (ok) best = std::max(best, count);
  }
  return best;
}

const Graph& fixture(const std::string& name) {
  for (const auto& f : shipped_fixtures())
    if (f.name == name) return f.graph;
  throw std::runtime_error("no fixture " + name);
}

bool all_pass(const std::vector<VerificationRecord>& records) {
  for (const auto& r : records)
    if (!r.pass) return false;
  return true;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (SweepFamily f :
       {SweepFamily::ExhaustiveVwc, SweepFamily::Whiskered,
        SweepFamily::UnmixedBipartite, SweepFamily::Join,
        SweepFamily::RandomGraph, SweepFamily::Fixture})
    CHECK(parse_family(family_name(f)) == f);
  CHECK(family_name(SweepFamily::ExhaustiveVwc) == "exhaustive-vwc");
  CHECK(family_name(SweepFamily::RandomGraph) == "random-graph");
  CHECK_THROWS_AS(parse_family("bogus"), ParseError);
  CHECK_THROWS_AS(parse_family(""), ParseError);
}

TEST_CASE("sweep config validation") {
  SweepConfig random;
  random.family = SweepFamily::RandomGraph;
  random.n = 6;
  random.s_max = 2;
  CHECK_THROWS_AS(validate_sweep_config(random), ParseError);  // no seed
  random.have_seed = true;
  random.seed = 7;
  CHECK_THROWS_AS(validate_sweep_config(random), ParseError);  // no samples
  random.samples = 10;
  CHECK_NOTHROW(validate_sweep_config(random));
  random.n = 99;
  CHECK_THROWS_AS(validate_sweep_config(random), BudgetExceeded);
  random.n = 1;
  CHECK_THROWS_AS(validate_sweep_config(random), ParseError);
  random.n = 6;
  random.s_max = 0;
  CHECK_THROWS_AS(validate_sweep_config(random), ParseError);

  SweepConfig fam;
  fam.family = SweepFamily::Whiskered;
  fam.h = 99;
  CHECK_THROWS_AS(validate_sweep_config(fam), BudgetExceeded);
  fam.h = 0;
  CHECK_THROWS_AS(validate_sweep_config(fam), ParseError);
  fam.h = 2;
  CHECK_NOTHROW(validate_sweep_config(fam));

  SweepConfig fix;
  fix.family = SweepFamily::Fixture;
  fix.h = 0;  // ignored for fixtures
  CHECK_NOTHROW(validate_sweep_config(fix));
}

TEST_CASE("shipped fixtures") {
  const std::vector<Fixture>& fs = shipped_fixtures();
  REQUIRE(fs.size() == 6);
  const char* names[] = {"c4", "c5", "gex", "gb", "boundary9", "wc4"};
  for (size_t i = 0; i < 6; ++i) CHECK(fs[i].name == names[i]);

  CHECK(graph_digest(fs[0].graph) == "x1-x2 x1-x4 x2-x3 x3-x4");
  CHECK(graph_digest(fs[1].graph) == "x1-x2 x1-x5 x2-x3 x3-x4 x4-x5");
  CHECK(fs[2].graph.vertex_count() == 8);
  CHECK(fs[2].graph.edge_count() == 10);
  CHECK(fs[3].graph.vertex_count() == 6);
  CHECK(fs[3].graph.edge_count() == 6);
  CHECK(fs[4].graph.vertex_count() == 9);
  CHECK(fs[4].graph.edge_count() == 9);
  CHECK(fs[5].graph == whisker(fs[0].graph));

  CHECK(is_very_well_covered(fixture("c4")));
  CHECK_FALSE(is_very_well_covered(fixture("c5")));
  CHECK(is_very_well_covered(fixture("gex")));
  CHECK(is_very_well_covered(fixture("gb")));
  CHECK_FALSE(is_very_well_covered(fixture("boundary9")));
  CHECK(is_well_covered(fixture("boundary9")));
  CHECK(is_very_well_covered(fixture("wc4")));
}

TEST_CASE("fixture files match shipped graphs") {
  std::string dir = std::string(EDGEREG_SOURCE_DIR) + "/fixtures/";
  for (const Fixture& f : shipped_fixtures()) {
    Graph from_file = Graph::parse_file(dir + f.name + ".edges");
    CHECK(from_file == f.graph);
  }
}

TEST_CASE("main theorem on fixtures") {
  std::vector<VerificationRecord> recs;
  verify_main_theorem(fixture("c4"), 2, &recs);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].statement == "main-theorem");
  CHECK(recs[0].graph == "x1-x2 x1-x4 x2-x3 x3-x4");
  CHECK(recs[0].s == 1);
  CHECK(recs[0].nu == 1);
  CHECK(recs[0].expected == 2);
  CHECK(recs[0].computed == 2);
  CHECK(recs[0].pass);
  CHECK(recs[1].s == 2);
  CHECK(recs[1].expected == 4);
  CHECK(recs[1].computed == 4);
  CHECK(recs[1].pass);

  recs.clear();
  const Graph& gb = fixture("gb");
  int nu_gb = nu_oracle(gb);
  CHECK(nu_gb == 1);
  verify_main_theorem(gb, 2, &recs);
  REQUIRE(recs.size() == 2);
  for (const auto& r : recs) {
    CHECK(r.nu == nu_gb);
    CHECK(r.expected == 2 * r.s + nu_gb - 1);
    CHECK(r.pass);
  }

  recs.clear();
  const Graph& wc4 = fixture("wc4");
  CHECK(nu_oracle(wc4) == 2);
  verify_main_theorem(wc4, 1, &recs);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].expected == 3);
  CHECK(recs[0].computed == 3);
  CHECK(recs[0].pass);

  recs.clear();
  CHECK_THROWS_AS(verify_main_theorem(fixture("c5"), 1, &recs),
                  NotVeryWellCovered);
  CHECK_THROWS_AS(verify_main_theorem(fixture("boundary9"), 1, &recs),
                  NotVeryWellCovered);
  CHECK(recs.empty());
}

TEST_CASE("main theorem keeps partial records when a budget trips") {
  Budgets b = budgets();
  b.max_polarized_vars = 5;  // allows I(C4), blocks polarizing I(C4)^2
  std::vector<VerificationRecord> recs;
  CHECK_THROWS_AS(verify_main_theorem(fixture("c4"), 2, &recs,
                                      Field::rationals(), b),
                  BudgetExceeded);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].s == 1);
  CHECK(recs[0].pass);
}

TEST_CASE("colon bound on fixtures") {
  const Graph& c4 = fixture("c4");
  std::vector<VerificationRecord> recs;
  verify_colon_bound(c4, {parse_edge_product(c4, "x1-x2")}, &recs);
  // (I^2 : x1x2) = I(C4) is squarefree, so the bound row gets an equality row
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].statement == "colon-bound");
  CHECK(recs[0].s == 1);
  CHECK(recs[0].nu == 1);
  CHECK(recs[0].expected == 2);
  CHECK(recs[0].computed == 2);
  CHECK(recs[0].pass);
  CHECK(recs[1].statement == "colon-sqfree");
  CHECK(recs[1].nu == 1);
  CHECK(recs[1].expected == 2);
  CHECK(recs[1].computed == 2);
  CHECK(recs[1].pass);

  // x4 and y3 are even-connected to themselves here, so the colon ideal has
  // squares and only the bound row appears
  const Graph& gex = fixture("gex");
  recs.clear();
  verify_colon_bound(gex, {parse_edge_product(gex, "x1-x2")}, &recs);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].statement == "colon-bound");
  CHECK(recs[0].expected == nu_oracle(gex) + 1);
  CHECK(recs[0].computed <= recs[0].expected);
  CHECK(recs[0].pass);

  // two-fold product on C4
  recs.clear();
  verify_colon_bound(c4, {parse_edge_product(c4, "x1-x2,x3-x4")}, &recs);
  REQUIRE(!recs.empty());
  CHECK(recs[0].s == 2);
  CHECK(recs[0].pass);
  for (const auto& r : recs) CHECK(r.pass);
}

TEST_CASE("boundary example records") {
  std::vector<VerificationRecord> recs;
  verify_counterexample_boundary(&recs);
  REQUIRE(recs.size() == 5);
  CHECK(recs[0].statement == "boundary-wellcovered");
  CHECK(recs[0].computed == 1);
  CHECK(recs[1].statement == "boundary-not-vwc");
  CHECK(recs[1].computed == 0);
  CHECK(recs[2].statement == "boundary-nu");
  CHECK(recs[2].computed == 2);
  CHECK(recs[2].computed == nu_oracle(fixture("boundary9")));
  CHECK(recs[3].statement == "boundary-power");
  CHECK(recs[3].s == 1);
  CHECK(recs[3].expected == 4);
  CHECK(recs[3].computed == 4);
  CHECK(recs[4].s == 2);
  CHECK(recs[4].expected == 6);
  CHECK(recs[4].computed == 6);
  CHECK(all_pass(recs));
}

TEST_CASE("whiskered family") {
  SweepConfig config;
  config.family = SweepFamily::Whiskered;
  config.h = 2;
  config.s_max = 2;
  std::vector<VerificationRecord> recs;
  verify_special_families(config, &recs);
  // bases up to isomorphism: K1, two isolated vertices, K2
  REQUIRE(recs.size() == 6);
  CHECK(all_pass(recs));
  for (const auto& r : recs) CHECK(r.statement == "whisker");
  // W(K1) = K2: reg(I^s) = 2s
  CHECK(recs[0].s == 1);
  CHECK(recs[0].expected == 2);
  CHECK(recs[1].expected == 4);
}

TEST_CASE("unmixed bipartite family") {
  SweepConfig config;
  config.family = SweepFamily::UnmixedBipartite;
  config.h = 2;
  config.s_max = 2;
  std::vector<VerificationRecord> recs;
  verify_special_families(config, &recs);
  // classes: K2, 2K2, P4, C4
  REQUIRE(recs.size() == 8);
  CHECK(all_pass(recs));
  std::set<int> nus;
  for (const auto& r : recs) {
    CHECK(r.statement == "unmixed-bipartite");
    nus.insert(r.nu);
  }
  CHECK(nus == std::set<int>{1, 2});
}

TEST_CASE("join family") {
  SweepConfig config;
  config.family = SweepFamily::Join;
  config.h = 2;
  config.s_max = 1;
  std::vector<VerificationRecord> recs;
  verify_special_families(config, &recs);
  // pool K2, 2K2, P4, C4: 10 unordered pairs plus the K2 triple
  REQUIRE(recs.size() == 11);
  CHECK(all_pass(recs));
  // K2 * K2 = K4: reg(I(K4)) = 2
  CHECK(recs[0].statement == "join");
  CHECK(recs[0].nu == 1);
  CHECK(recs[0].expected == 2);
  CHECK(recs[0].computed == 2);

  SweepConfig bad = config;
  bad.family = SweepFamily::RandomGraph;
  bad.have_seed = true;
  bad.samples = 1;
  std::vector<VerificationRecord> none;
  CHECK_THROWS_AS(verify_special_families(bad, &none), ParseError);
}

TEST_CASE("differential colon sweep") {
  SweepConfig config;
  config.family = SweepFamily::RandomGraph;
  config.n = 6;
  config.s_max = 2;
  config.samples = 20;
  config.seed = 12345;
  config.have_seed = true;
  std::vector<VerificationRecord> first;
  differential_colon_sweep(config, &first);
  REQUIRE(first.size() == 20);
  CHECK(all_pass(first));
  for (const auto& r : first) {
    CHECK(r.statement == "colon-differential");
    CHECK(r.s >= 1);
    CHECK(r.s <= 2);
    CHECK(r.expected == 2);
    CHECK(r.computed == 2);
    CHECK(!r.graph.empty());
  }
  std::vector<VerificationRecord> second;
  differential_colon_sweep(config, &second);
  CHECK(records_to_csv(first, true) == records_to_csv(second, true));
}

TEST_CASE("fixture sweep") {
  SweepConfig config;
  config.family = SweepFamily::Fixture;
  config.s_max = 1;
  SweepOutcome out = run_sweep(config);
  CHECK(out.all_pass);
  CHECK(out.regression.empty());
  // 4 main-theorem rows, 3 colon rows, 5 boundary rows, 1 observation
  REQUIRE(out.records.size() == 13);
  std::vector<std::string> statements;
  for (const auto& r : out.records) statements.push_back(r.statement);
  CHECK(std::count(statements.begin(), statements.end(), "main-theorem") == 4);
  CHECK(std::count(statements.begin(), statements.end(), "colon-bound") == 2);
  CHECK(std::count(statements.begin(), statements.end(), "colon-sqfree") == 1);
  CHECK(std::count(statements.begin(), statements.end(), "c5-power") == 1);
  // the C5 observation row carries no expectation
  const VerificationRecord& c5row = out.records.back();
  CHECK(c5row.statement == "c5-power");
  CHECK(c5row.expected == -1);
  CHECK(c5row.computed == 4);
  CHECK(c5row.pass);

  int before = thread_count();
  set_thread_count(1);
  SweepOutcome serial = run_sweep(config);
  set_thread_count(4);
  SweepOutcome parallel = run_sweep(config);
  set_thread_count(before);
  CHECK(records_to_csv(serial.records, true) ==
        records_to_csv(parallel.records, true));
}

TEST_CASE("random sweep via run_sweep") {
  SweepConfig config;
  config.family = SweepFamily::RandomGraph;
  config.n = 5;
  config.s_max = 2;
  config.samples = 10;
  config.seed = 99;
  config.have_seed = true;
  SweepOutcome out = run_sweep(config);
  CHECK(out.all_pass);
  CHECK(out.records.size() == 10);
  CHECK(out.regression.empty());
}

TEST_CASE("csv and json writers") {
  std::vector<VerificationRecord> recs;
  VerificationRecord a;
  a.statement = "main-theorem";
  a.graph = "x1-x2";
  a.s = 1;
  a.nu = 1;
  a.expected = 2;
  a.computed = 2;
  a.pass = true;
  a.millis = 37;
  VerificationRecord b;
  b.statement = "colon-bound";
  b.graph = "a-b v:c";
  b.s = 2;
  b.nu = 3;
  b.expected = 4;
  b.computed = 5;
  b.pass = false;
  b.millis = 8;
  recs.push_back(a);
  recs.push_back(b);

  CHECK(records_to_csv(recs, true) ==
        "statement,graph,s,nu,expected,computed,pass,millis\n"
        "main-theorem,x1-x2,1,1,2,2,true,0\n"
        "colon-bound,a-b v:c,2,3,4,5,false,0\n");
  CHECK(records_to_csv(recs, false) ==
        "statement,graph,s,nu,expected,computed,pass,millis\n"
        "main-theorem,x1-x2,1,1,2,2,true,37\n"
        "colon-bound,a-b v:c,2,3,4,5,false,8\n");

  nlohmann::ordered_json arr = records_to_json(recs, true);
  REQUIRE(arr.size() == 2);
  CHECK(arr[0]["statement"] == "main-theorem");
  CHECK(arr[0]["graph"] == "x1-x2");
  CHECK(arr[0]["s"] == 1);
  CHECK(arr[0]["nu"] == 1);
  CHECK(arr[0]["expected"] == 2);
  CHECK(arr[0]["computed"] == 2);
  CHECK(arr[0]["pass"] == true);
  CHECK(arr[0]["millis"] == 0);
  CHECK(arr[1]["pass"] == false);
  nlohmann::ordered_json keep = records_to_json(recs, false);
  CHECK(keep[1]["millis"] == 8);
}

TEST_CASE("graph shrinking") {
  Graph p4 = Graph::parse_string("a b\nb c\nc d\n");
  Graph small = shrink_graph(
      p4, [](const Graph& g) { return g.has_edge("b", "c"); });
  CHECK(small.edge_count() == 1);
  CHECK(small.vertex_count() == 2);
  CHECK(small.has_edge("b", "c"));

  // a predicate that throws on small candidates keeps the last safe graph
  Graph guarded = shrink_graph(p4, [](const Graph& g) {
    if (g.edge_count() < 2) throw std::runtime_error("too small");
    return g.has_edge("b", "c");
  });
  CHECK(guarded.edge_count() == 2);
  CHECK(guarded.has_edge("b", "c"));

  Graph untouched =
      shrink_graph(p4, [](const Graph&) { return false; });
  CHECK(untouched == p4);
}

TEST_CASE("product shrinking") {
  Graph c4 = fixture("c4");
  EdgeProduct p = parse_edge_product(c4, "x1-x2,x2-x3,x1-x2");
  EdgeProduct small = shrink_product(p, [&](const EdgeProduct& cand) {
    for (const auto& e : cand.edges)
      if (c4.name(e.first) == "x1" && c4.name(e.second) == "x2") return true;
    return false;
  });
  CHECK(small.s() == 1);
  CHECK(small.to_string() == "x1-x2");

  // never shrinks below one factor
  EdgeProduct one =
      shrink_product(p, [](const EdgeProduct&) { return true; });
  CHECK(one.s() == 1);
}

TEST_CASE("regression text round-trips") {
  Graph c4 = fixture("c4");
  EdgeProduct p = parse_edge_product(c4, "x1-x2,x3-x4");
  std::string with_product = regression_text("colon-differential", c4, &p);
  CHECK(with_product.rfind("# statement: colon-differential\n"
                           "# product: x1-x2,x3-x4\n",
                           0) == 0);
  CHECK(Graph::parse_string(with_product) == c4);

  std::string bare = regression_text("main-theorem", c4, nullptr);
  CHECK(bare.rfind("# statement: main-theorem\n", 0) == 0);
  CHECK(bare.find("# product") == std::string::npos);
  CHECK(Graph::parse_string(bare) == c4);
}
