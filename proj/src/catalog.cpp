#include "pstlab/catalog.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "pstlab/errors.hpp"

namespace pstlab {

Graph generalized_petersen(int n, int k) {
  if (n < 3) throw invalid_input("generalized_petersen needs n >= 3, got n=" + std::to_string(n));
  if (k < 1 || 2 * k >= n)
    throw invalid_input("generalized_petersen needs 1 <= k < n/2, got k=" + std::to_string(k));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(i, i % n + 1);                  // outer cycle
    edges.emplace_back(i, n + i);                      // spoke
    edges.emplace_back(n + i, n + (i - 1 + k) % n + 1);  // inner star polygon
  }
  return Graph::from_edge_list(2 * n, edges,
                               "GP(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

Graph w_graph() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= 7; ++v) {
    edges.emplace_back(1, v);
    edges.emplace_back(v, 8);
  }
  return Graph::from_edge_list(8, edges, "W8");
}

Graph hypercube(int k) {
  if (k < 1) throw invalid_input("hypercube needs k >= 1");
  return power_product(path(2), k).renamed("Q" + std::to_string(k));
}

Graph p3_grid(int k) {
  if (k < 1) throw invalid_input("p3_grid needs k >= 1");
  return power_product(path(3), k).renamed("P3^" + std::to_string(k));
}

namespace {

// Vertices 11..20 listed against their three neighbours among 1..10; the
// two classes of the bipartition are 1..10 and 11..20.
constexpr int kMateRows[10][3] = {
    {1, 2, 3}, {1, 4, 6}, {1, 7, 8}, {2, 4, 8},  {2, 5, 9},
    {3, 5, 6}, {3, 7, 9}, {4, 5, 10}, {6, 7, 10}, {8, 9, 10},
};

Graph build_mate() {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < 10; ++r)
    for (int c : kMateRows[r]) edges.emplace_back(11 + r, c);
  return Graph::from_edge_list(20, edges, "H'(5,2)");
}

Graph build_z10() {
  // K_{3,3} with two same-part vertices expanded into triangles; each
  // triangle vertex inherits exactly one of the three removed edges.
  // 1..3 and 4..6 are the triangles, 7 the untouched part vertex,
  // 8..10 the opposite part.
  std::vector<std::pair<int, int>> edges = {
      {1, 2}, {1, 3}, {2, 3},  // first triangle
      {4, 5}, {4, 6}, {5, 6},  // second triangle
      {1, 8}, {2, 9}, {3, 10},  // inherited edges, first triangle
      {4, 8}, {5, 9}, {6, 10},  // inherited edges, second triangle
      {7, 8}, {7, 9}, {7, 10},  // untouched vertex keeps all three
  };
  return Graph::from_edge_list(10, edges, "Z10");
}

Graph build_trunctet() {
  // Line graph of the K4 subdivision (truncated tetrahedron): one vertex per
  // ordered pair (v,u), v != u in {1..4}; triangle within each fixed v,
  // bridge (v,u) ~ (u,v).
  std::vector<std::pair<int, int>> verts;
  for (int v = 1; v <= 4; ++v)
    for (int u = 1; u <= 4; ++u)
      if (u != v) verts.emplace_back(v, u);
  auto index_of = [&](int v, int u) {
    for (std::size_t t = 0; t < verts.size(); ++t)
      if (verts[t] == std::make_pair(v, u)) return static_cast<int>(t) + 1;
    return 0;
  };
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      const auto [v1, u1] = verts[a];
      const auto [v2, u2] = verts[b];
      if (v1 == v2 || (v2 == u1 && u2 == v1))
        edges.emplace_back(index_of(v1, u1), index_of(v2, u2));
    }
  return Graph::from_edge_list(12, edges, "L(S(K4))");
}

Graph build_dk23() {
  // Two copies of K_{2,3} joined by a perfect matching on the degree-2
  // vertices. 1,2 / 9,10 are the degree-3 parts; 3..5 / 6..8 the matched
  // degree-2 parts (3-6, 4-7, 5-8).
  std::vector<std::pair<int, int>> edges;
  for (int h : {1, 2})
    for (int l : {3, 4, 5}) edges.emplace_back(h, l);
  for (int h : {9, 10})
    for (int l : {6, 7, 8}) edges.emplace_back(h, l);
  edges.emplace_back(3, 6);
  edges.emplace_back(4, 7);
  edges.emplace_back(5, 8);
  return Graph::from_edge_list(10, edges, "DK(2,3)");
}

Graph build_tutte_coxeter() {
  // Incidence graph of the 2-subsets of {1..6} versus the perfect matchings
  // of K6 (15 + 15 vertices). Odd vertices 2i-1 are the 2-subsets in
  // lexicographic order; even vertices 2i are the matchings in a fixed
  // enumeration order; classes therefore alternate with vertex parity.
  std::vector<std::pair<int, int>> points;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b) points.emplace_back(a, b);

  std::vector<std::vector<std::pair<int, int>>> matchings;
  auto enumerate = [&](auto&& self, std::vector<int> left,
                       std::vector<std::pair<int, int>> acc) -> void {
    if (left.empty()) {
      matchings.push_back(acc);
      return;
    }
    const int first = left.front();
    for (std::size_t t = 1; t < left.size(); ++t) {
      std::vector<int> rest;
      for (std::size_t s = 1; s < left.size(); ++s)
        if (s != t) rest.push_back(left[s]);
      auto next = acc;
      next.emplace_back(first, left[t]);
      self(self, rest, next);
    }
  };
  enumerate(enumerate, {1, 2, 3, 4, 5, 6}, {});

  std::vector<std::pair<int, int>> edges;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t m = 0; m < matchings.size(); ++m)
      if (std::find(matchings[m].begin(), matchings[m].end(), points[p]) != matchings[m].end())
        edges.emplace_back(2 * static_cast<int>(p) + 1, 2 * static_cast<int>(m) + 2);
  return Graph::from_edge_list(30, edges, "Tutte-Coxeter");
}

void validate_entry(const CatalogEntry& entry) {
  if (!entry.graph.connected())
    throw numerical_error("catalog graph " + entry.key + " is not connected");
  const auto degree = entry.graph.regular_degree();
  if (!degree || *degree != 3)
    throw numerical_error("catalog graph " + entry.key + " is not cubic");
  const IntegralityResult result = integral_certificate(entry.graph);
  if (!result.is_integral())
    throw numerical_error("catalog graph " + entry.key + " is not integral; residual " +
                          format_poly(result.residual));
  if (result.certificate->roots != entry.expected_spectrum) {
    std::ostringstream msg;
    msg << "catalog graph " << entry.key << " spectrum mismatch; computed:";
    for (const auto& [l, m] : result.certificate->roots) msg << " " << l << "^" << m;
    throw numerical_error(msg.str());
  }
}

std::vector<CatalogEntry> build_thirteen() {
  using Spectrum = std::vector<std::pair<long, int>>;
  std::vector<CatalogEntry> entries;
  auto add = [&](const std::string& key, const Graph& g, Spectrum spectrum, std::string note) {
    entries.push_back({key, g.renamed(key), std::move(spectrum), std::move(note)});
    validate_entry(entries.back());
  };

  add("k4", complete(4), {{3, 1}, {-1, 3}}, "complete graph on four vertices");
  add("k33", complete_bipartite(3, 3), {{3, 1}, {0, 4}, {-3, 1}}, "complete bipartite 3+3");
  add("prism3", cartesian_product(cycle(3), path(2)), {{3, 1}, {1, 1}, {0, 2}, {-2, 2}},
      "triangular prism C3 x K2");
  add("prism6", cartesian_product(cycle(6), path(2)),
      {{3, 1}, {2, 2}, {1, 1}, {0, 4}, {-1, 1}, {-2, 2}, {-3, 1}}, "hexagonal prism C6 x K2");
  add("cube", hypercube(3), {{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}, "3-dimensional cube P2^x3");
  add("petersen", generalized_petersen(5, 2), {{3, 1}, {1, 5}, {-2, 4}}, "Petersen graph GP(5,2)");
  add("z10", build_z10(), {{3, 1}, {2, 1}, {1, 3}, {-1, 2}, {-2, 3}},
      "K33 with two same-part vertices expanded to triangles");
  add("trunctet", build_trunctet(), {{3, 1}, {2, 3}, {0, 2}, {-1, 3}, {-2, 3}},
      "truncated tetrahedron, line graph of the K4 subdivision");
  add("dk23", build_dk23(), {{3, 1}, {2, 1}, {1, 2}, {0, 2}, {-1, 2}, {-2, 1}, {-3, 1}},
      "two K23 copies matched on their degree-2 vertices");
  add("desargues", generalized_petersen(10, 3),
      {{3, 1}, {2, 4}, {1, 5}, {-1, 5}, {-2, 4}, {-3, 1}}, "Desargues graph GP(10,3)");
  add("desargues-mate", mate_desargues(), {{3, 1}, {2, 4}, {1, 5}, {-1, 5}, {-2, 4}, {-3, 1}},
      "cospectral non-isomorphic partner of GP(10,3)");
  add("nauru", generalized_petersen(12, 5),
      {{3, 1}, {2, 6}, {1, 3}, {0, 4}, {-1, 3}, {-2, 6}, {-3, 1}}, "Nauru graph GP(12,5)");
  add("tutte-coxeter", build_tutte_coxeter(), {{3, 1}, {2, 9}, {0, 10}, {-2, 9}, {-3, 1}},
      "incidence graph of 2-subsets vs perfect matchings of K6");
  return entries;
}

}  // namespace

Graph mate_desargues() {
  static std::once_flag checked;
  Graph mate = build_mate();
  std::call_once(checked, [&] {
    const IntegralityResult result = integral_certificate(mate);
    const Graph desargues = generalized_petersen(10, 3);
    const IntegralityResult reference = integral_certificate(desargues);
    if (!result.is_integral() || !reference.is_integral() ||
        result.certificate->roots != reference.certificate->roots)
      throw numerical_error("desargues-mate spectrum does not match GP(10,3)");
    // Cheap invariant first; the per-vertex 6-cycle counts happen to tie
    // here, so the decision falls through to the exact search.
    if (six_cycle_counts(mate) == six_cycle_counts(desargues) && isomorphic(mate, desargues))
      throw numerical_error("desargues-mate is isomorphic to GP(10,3)");
  });
  return mate;
}

const std::vector<CatalogEntry>& thirteen() {
  static const std::vector<CatalogEntry> entries = build_thirteen();
  return entries;
}

Graph by_name(const std::string& key) {
  if (key == "w8") return w_graph();
  for (const CatalogEntry& entry : thirteen())
    if (entry.key == key) return entry.graph;
  throw invalid_input("unknown catalog graph: " + key);
}

std::vector<std::string> catalog_keys() {
  std::vector<std::string> keys;
  for (const CatalogEntry& entry : thirteen()) keys.push_back(entry.key);
  keys.push_back("w8");
  return keys;
}

}  // namespace pstlab
