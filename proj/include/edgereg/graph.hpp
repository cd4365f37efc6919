#ifndef EDGEREG_GRAPH_HPP
#define EDGEREG_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "edgereg/config.hpp"

namespace edgereg {

// Finite simple graph.  Vertices are distinct name tokens kept in insertion
// order; all derived vertex lists and edge lists follow that order, so every
// operation is deterministic.  Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // edges are name pairs; unseen names are appended in order of first
  // appearance (first endpoint before second, edge list order).  Loops are
  // rejected, duplicate edges collapse.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges,
        const Budgets& b = budgets());

  // Text format: one edge per line as two whitespace-separated tokens,
  // lines starting with '#' ignored, isolated vertices declared via
  // "vertex <name>" lines.
  static Graph parse(std::istream& in, const Budgets& b = budgets());
  static Graph parse_string(const std::string& text, const Budgets& b = budgets());
  static Graph parse_file(const std::string& path, const Budgets& b = budgets());

  // Canonical emission: every vertex as a "vertex" line in insertion order,
  // then edges sorted by index pair.  Re-ingesting reproduces an equal graph.
  void emit(std::ostream& out) const;
  std::string to_text() const;

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const;
  bool has_vertex(const std::string& name) const;
  int index_of(const std::string& name) const;  // throws UnknownVertex
  const std::string& name(int v) const { return names_[static_cast<size_t>(v)]; }
  const std::vector<std::string>& vertices() const { return names_; }

  bool has_edge(int u, int v) const;
  bool has_edge(const std::string& u, const std::string& v) const;
  uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  uint64_t closed_neighbors(int v) const { return adj_[static_cast<size_t>(v)] | (uint64_t{1} << v); }
  int degree(int v) const;
  uint64_t vertex_mask() const;

  // Edges as index pairs (i < j), ordered by (i, j).
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::pair<std::string, std::string>> edge_names() const;

  // Induced subgraph on the vertices of keep (a bitmask over indices);
  // vertex order and names survive.
  Graph induced(uint64_t keep) const;

  bool operator==(const Graph& rhs) const {
    return names_ == rhs.names_ && adj_ == rhs.adj_;
  }
  bool operator!=(const Graph& rhs) const { return !(*this == rhs); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<uint64_t> adj_;

  void add_vertex(const std::string& name, const Budgets& b);
  void add_edge_by_name(const std::string& u, const std::string& v, const Budgets& b);
};

// Closed neighborhood N[S] of a set of vertices, as a mask.
uint64_t closed_neighborhood(const Graph& g, uint64_t s);

// G minus N[S].  Unknown names throw UnknownVertex.
Graph delete_closed_neighborhood(const Graph& g, const std::vector<std::string>& s);

// Plain vertex deletion (induced subgraph on the complement).
Graph delete_vertices(const Graph& g, const std::vector<std::string>& s);

// Whisker graph W(G): a pendant vertex attached to every vertex.  Pendant of
// v is named "<v>_w" (suffix extended with "_w" until fresh), which sorts
// after v and keeps the original side the lexicographically smallest cover.
Graph whisker(const Graph& g);

// Join G1 * ... * Gk: disjoint union plus all edges between distinct parts.
// Vertex name collisions across parts throw VertexNameCollision.
Graph join(const std::vector<Graph>& parts);

// Copy with every vertex renamed through prefix + name (used to make joins
// of same-named graphs collision-free).
Graph prefix_vertices(const Graph& g, const std::string& prefix);

// ---- exact search -------------------------------------------------------

// Independence number via bitset branch and bound.
int independence_number(const Graph& g);

// Enumerates all maximal independent sets; fn returns false to abort early.
void for_each_maximal_independent_set(const Graph& g,
                                      const std::function<bool(uint64_t)>& fn);

bool is_vertex_cover(const Graph& g, uint64_t cover);
bool is_minimal_vertex_cover(const Graph& g, uint64_t cover);

// Exact witness of a maximum induced matching: pairwise disjoint edges with
// no edge of G joining two of them.
struct MatchingCertificate {
  std::vector<std::pair<std::string, std::string>> edges;
  bool induced = true;
};

MatchingCertificate induced_matching_witness(const Graph& g);
int induced_matching_number(const Graph& g);
bool matching_certificate_valid(const Graph& g, const MatchingCertificate& cert);

// Lexicographically minimal adjacency matrix over all vertex permutations,
// flattened row-major as bit rows.  Brute force with row pruning; vertex
// count is capped (default 10) because this is only used to deduplicate
// small generated families.
std::vector<uint64_t> canonical_form(const Graph& g, const Budgets& b = budgets());

// Deterministic one-line digest: sorted edge tokens "u-v" space-joined,
// isolated vertices appended as "v:<name>".  Comma-free so it can sit in a
// CSV cell.
std::string graph_digest(const Graph& g);

}  // namespace edgereg

#endif
