#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "edgereg/errors.hpp"
#include "edgereg/graph.hpp"

using namespace edgereg;

namespace {

Graph cycle(int n, const std::string& prefix = "x") {
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    edges.emplace_back(prefix + std::to_string(i + 1),
                       prefix + std::to_string((i + 1) % n + 1));
  return Graph({}, edges);
}

Graph path(const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (size_t i = 0; i + 1 < names.size(); ++i)
    edges.emplace_back(names[i], names[i + 1]);
  return Graph({}, edges);
}

// Independent oracle for the induced matching number: try every subset of
// edges and keep the largest that is pairwise disjoint and unjoined.
int nu_oracle(const Graph& g) {
  auto edges = g.edges();
  int m = static_cast<int>(edges.size());
  int best = 0;
  for (uint64_t pick = 0; pick < (uint64_t{1} << m); ++pick) {
    std::vector<std::pair<int, int>> chosen;
    for (int e = 0; e < m; ++e)
      if ((pick >> e) & 1) chosen.push_back(edges[static_cast<size_t>(e)]);
    bool ok = true;
    for (size_t a = 0; a < chosen.size() && ok; ++a)
      for (size_t b = a + 1; b < chosen.size() && ok; ++b) {
        int verts[4] = {chosen[a].first, chosen[a].second, chosen[b].first,
                        chosen[b].second};
        for (int p = 0; p < 2 && ok; ++p)
          for (int q = 2; q < 4 && ok; ++q)
            if (verts[p] == verts[q] || g.has_edge(verts[p], verts[q])) ok = false;
      }
    if (ok) best = std::max(best, static_cast<int>(chosen.size()));
  }
  return best;
}

Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::vector<std::string> verts;
  for (int i = 0; i < n; ++i) verts.push_back("v" + std::to_string(i + 1));
  std::vector<std::pair<std::string, std::string>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) edges.emplace_back(verts[static_cast<size_t>(i)],
                                            verts[static_cast<size_t>(j)]);
  return Graph(verts, edges);
}

const char* nine_vertex_text =
    "x1 x2\nx2 x3\nx3 x4\nx4 x5\nx5 x1\nx1 x6\nx6 x9\nx6 x7\nx7 x8\n";

}  // namespace

TEST_CASE("parse and emit round-trip") {
  std::string text = "# a comment\na b\nb c\nvertex d\n";
  Graph g = Graph::parse_string(text);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge("a", "b"));
  CHECK(g.has_edge("b", "c"));
  CHECK(!g.has_edge("a", "c"));
  CHECK(g.degree(g.index_of("d")) == 0);

  Graph again = Graph::parse_string(g.to_text());
  CHECK(again == g);
  CHECK(again.to_text() == g.to_text());
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Graph::parse_string("a\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse_string("a b c\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse_string("a a\n"), ParseError);
  CHECK_THROWS_AS(Graph::parse_string("vertex\n"), ParseError);
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), VertexNameCollision);
  Graph g = Graph::parse_string("a b\n");
  CHECK_THROWS_AS(g.index_of("zz"), UnknownVertex);
}

TEST_CASE("duplicate edge lines collapse") {
  Graph g = Graph::parse_string("a b\nb a\na b\n");
  CHECK(g.edge_count() == 1);
}

TEST_CASE("vertex budget enforced") {
  Budgets tight;
  tight.max_vertices = 3;
  CHECK_THROWS_AS(Graph({"a", "b", "c", "d"}, {}, tight), BudgetExceeded);
}

TEST_CASE("induced subgraph keeps names and order") {
  Graph g = cycle(4);
  uint64_t keep = (uint64_t{1} << g.index_of("x1")) | (uint64_t{1} << g.index_of("x2")) |
                  (uint64_t{1} << g.index_of("x4"));
  Graph h = g.induced(keep);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 2);
  CHECK(h.has_edge("x1", "x2"));
  CHECK(h.has_edge("x1", "x4"));
}

TEST_CASE("closed neighborhood deletion") {
  Graph g = Graph::parse_string("1 2\n2 3\n3 4\n4 1\n");
  Graph h = delete_closed_neighborhood(g, {"1"});
  CHECK(h.vertex_count() == 1);
  CHECK(h.vertices()[0] == "3");
  CHECK(h.edge_count() == 0);

  Graph same = delete_closed_neighborhood(g, {});
  CHECK(same == g);
  CHECK_THROWS_AS(delete_closed_neighborhood(g, {"nope"}), UnknownVertex);
}

TEST_CASE("vertex deletion") {
  Graph g = cycle(5);
  Graph h = delete_vertices(g, {"x1"});
  CHECK(h.vertex_count() == 4);
  CHECK(h.edge_count() == 3);
}

TEST_CASE("whisker shape") {
  Graph w1 = whisker(Graph({"a"}, {}));
  CHECK(w1.vertex_count() == 2);
  CHECK(w1.edge_count() == 1);

  Graph wc4 = whisker(cycle(4));
  CHECK(wc4.vertex_count() == 8);
  CHECK(wc4.edge_count() == 8);
  CHECK(wc4.has_edge("x1", "x1_w"));
  CHECK(wc4.degree(wc4.index_of("x1_w")) == 1);
}

TEST_CASE("whisker pendant names stay fresh") {
  Graph g = Graph({"a", "a_w"}, {{"a", "a_w"}});
  Graph w = whisker(g);
  CHECK(w.vertex_count() == 4);
  // pendant of "a" had to skip the taken name
  CHECK(w.has_vertex("a_w_w"));
}

TEST_CASE("join counts and errors") {
  Graph k1a({"a"}, {}), k1b({"b"}, {});
  Graph j = join({k1a, k1b});
  CHECK(j.vertex_count() == 2);
  CHECK(j.edge_count() == 1);

  Graph e1 = Graph::parse_string("a b\n");
  Graph e2 = Graph::parse_string("c d\n");
  Graph k4 = join({e1, e2});
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);  // K4

  Graph c4a = cycle(4, "a");
  Graph c4b = cycle(4, "b");
  Graph big = join({c4a, c4b});
  CHECK(big.vertex_count() == 8);
  CHECK(big.edge_count() == 4 + 4 + 16);

  CHECK_THROWS_AS(join({c4a, c4a}), VertexNameCollision);
  Graph renamed = prefix_vertices(c4a, "p.");
  CHECK(renamed.has_edge("p.a1", "p.a2"));
  CHECK_NOTHROW(join({c4a, renamed}));
}

TEST_CASE("induced matching number examples") {
  CHECK(induced_matching_number(Graph::parse_string("a b\n")) == 1);
  CHECK(induced_matching_number(cycle(5)) == 1);
  CHECK(induced_matching_number(Graph::parse_string("a b\nc d\n")) == 2);
  // frozen from the edge-subset oracle
  Graph p5 = path({"a", "b", "c", "d", "e"});
  CHECK(nu_oracle(p5) == 2);
  CHECK(induced_matching_number(p5) == 2);
  CHECK(induced_matching_number(Graph({"a", "b"}, {})) == 0);
}

TEST_CASE("induced matching witness is valid and optimal") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 3 + static_cast<int>(rng() % 5));
    MatchingCertificate cert = induced_matching_witness(g);
    CHECK(matching_certificate_valid(g, cert));
    CHECK(static_cast<int>(cert.edges.size()) == nu_oracle(g));
  }
}

TEST_CASE("induced matching number is monotone under induced subgraphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 6);
    int nu = induced_matching_number(g);
    uint64_t keep = rng() & g.vertex_mask();
    CHECK(induced_matching_number(g.induced(keep)) <= nu);
  }
}

TEST_CASE("independence number and maximal independent sets") {
  Graph c4 = cycle(4);
  CHECK(independence_number(c4) == 2);
  int count = 0;
  for_each_maximal_independent_set(c4, [&](uint64_t) {
    ++count;
    return true;
  });
  CHECK(count == 2);

  Graph p3 = path({"a", "b", "c"});
  CHECK(independence_number(p3) == 2);

  Graph empty;
  CHECK(independence_number(empty) == 0);
}

TEST_CASE("vertex covers") {
  Graph c4 = Graph::parse_string("1 2\n2 3\n3 4\n4 1\n");
  uint64_t cover13 = (uint64_t{1} << c4.index_of("1")) | (uint64_t{1} << c4.index_of("3"));
  CHECK(is_vertex_cover(c4, cover13));
  CHECK(is_minimal_vertex_cover(c4, cover13));
  CHECK(is_vertex_cover(c4, c4.vertex_mask()));
  CHECK(!is_minimal_vertex_cover(c4, c4.vertex_mask()));
  CHECK(!is_vertex_cover(c4, uint64_t{1} << c4.index_of("1")));
}

TEST_CASE("canonical form identifies isomorphic graphs") {
  Graph a = Graph::parse_string("1 2\n2 3\n3 4\n4 1\n");
  Graph b = Graph::parse_string("c d\na c\nb d\na b\n");  // C4 in disguise
  CHECK(canonical_form(a) == canonical_form(b));

  Graph p4 = path({"1", "2", "3", "4"});
  CHECK(canonical_form(a) != canonical_form(p4));

  Budgets tight;
  tight.max_canonical_vertices = 3;
  CHECK_THROWS_AS(canonical_form(a, tight), BudgetExceeded);
}

TEST_CASE("canonical form is invariant under random relabeling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    Graph g = random_graph(rng, n);
    auto key = canonical_form(g);
    // shuffle names
    std::vector<std::string> names = g.vertices();
    std::shuffle(names.begin(), names.end(), rng);
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [i, j] : g.edges())
      edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(j)]);
    Graph shuffled(names, edges);
    CHECK(canonical_form(shuffled) == key);
  }
}

TEST_CASE("nine vertex example parses and counts") {
  Graph g = Graph::parse_string(nine_vertex_text);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 9);
  CHECK(induced_matching_number(g) == 2);
  CHECK(nu_oracle(g) == 2);
}

TEST_CASE("graph digest is deterministic and comma-free") {
  Graph g = Graph::parse_string("b a\nvertex z\n");
  std::string d = graph_digest(g);
  CHECK(d == "b-a v:z");
  CHECK(d.find(',') == std::string::npos);
  CHECK(graph_digest(Graph()) == "(empty)");
}
