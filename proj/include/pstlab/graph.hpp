#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pstlab {

/// Undirected simple graph stored as a symmetric 0/1 adjacency matrix.
///
/// Vertices carry the labels 1..n everywhere in the public API (the edge-list
/// file format, the CLI and the catalog all speak 1-based). Instances are
/// immutable after construction and safe to share across threads.
class Graph {
 public:
  /// Build from an explicit edge list. Duplicate edges collapse silently;
  /// self-loops and out-of-range endpoints are rejected with the offending pair.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                              std::string name = "");

  int order() const { return n_; }
  int edge_count() const;
  const std::string& name() const { return name_; }

  bool adjacent(int u, int v) const;  // 1-based endpoints
  int degree(int u) const;

  /// All edges (u,v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  std::vector<int> degree_sequence() const;

  /// Engaged with k iff every vertex has degree k.
  std::optional<int> regular_degree() const;

  bool connected() const;

  /// Raw 0-based adjacency access for numerical kernels.
  bool adj0(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }

  Graph renamed(std::string name) const;

 private:
  Graph(int n, std::vector<std::uint8_t> adj, std::string name);
  void check_invariants() const;

  int n_ = 0;
  std::vector<std::uint8_t> adj_;  // row-major n*n
  std::string name_;
};

// Standard constructions. path(n) is the path on n vertices (n-1 edges).
Graph path(int n);
Graph cycle(int n);  // requires n >= 3
Graph complete(int n);
Graph complete_bipartite(int p, int q);  // parts {1..p} and {p+1..p+q}

/// Cartesian product: vertices are pairs (i,j) numbered row-major,
/// (i,j) -> (i-1)*|V2| + j; edges where one coordinate is fixed and the
/// other moves along an edge of its factor. Degrees and diameters add.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// k-fold Cartesian power of g with itself; |V| = |V(g)|^k.
Graph power_product(const Graph& g, int k);

/// BFS shortest-path length; nullopt when j is unreachable from i.
std::optional<int> distance(const Graph& g, int i, int j);

/// Max distance over all pairs; nullopt for a disconnected graph.
std::optional<int> diameter(const Graph& g);

// Edge-list text format: '#' comment lines anywhere; the first data token is
// the vertex count, each following data line is "u v" (1-based, whitespace
// separated). serialize emits the count then edges sorted lexicographically.
Graph parse_edge_list(std::istream& in, std::string name = "");
Graph parse_edge_list_file(const std::string& path);
std::string serialize_edge_list(const Graph& g);

/// Sorted per-vertex counts of 6-cycles through each vertex (brute-force
/// path enumeration; intended for small catalog graphs).
std::vector<long> six_cycle_counts(const Graph& g);

/// Exact isomorphism decision by backtracking over a BFS vertex order.
/// Feasible for the catalog sizes (n <= 30, degree <= 3).
bool isomorphic(const Graph& g, const Graph& h);

/// BFS 2-coloring; engaged with the color classes iff g is bipartite.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

}  // namespace pstlab
