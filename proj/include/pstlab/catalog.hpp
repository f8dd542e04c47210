#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pstlab/graph.hpp"
#include "pstlab/spectral.hpp"

namespace pstlab {

/// Generalized Petersen graph GP(n,k): outer cycle u_1..u_n (vertices 1..n),
/// inner vertices v_1..v_n (n+1..2n) with v_i ~ v_{i+k mod n}, spokes u_i ~ v_i.
Graph generalized_petersen(int n, int k);

/// Double star on 8 vertices: {1,i} and {j,8} for 2 <= i,j <= 7.
/// Degrees (6,2,2,2,2,2,2,6); not regular, not integral (residual x^2 - 12),
/// yet it admits perfect state transfer between 1 and 8.
Graph w_graph();

/// The cospectral non-isomorphic partner of the Desargues graph GP(10,3):
/// a bipartite cubic graph on 20 vertices with the same exact spectrum.
/// Construction aborts unless the spectrum matches and the graph is
/// certifiably not isomorphic to GP(10,3).
Graph mate_desargues();

Graph hypercube(int k);  // P2 to the k-th Cartesian power
Graph p3_grid(int k);    // P3 to the k-th Cartesian power

/// One member of the cubic-integral catalog with its published spectrum.
struct CatalogEntry {
  std::string key;
  Graph graph;
  std::vector<std::pair<long, int>> expected_spectrum;  // descending (lambda, multiplicity)
  std::string source_note;
};

/// The thirteen connected cubic integral graphs, in a fixed order with
/// stable keys: k4, k33, prism3, prism6, cube, petersen, z10, trunctet,
/// dk23, desargues, desargues-mate, nauru, tutte-coxeter. Every entry's
/// exact certificate is validated against its expected spectrum when the
/// catalog is first built; any mismatch aborts with a diagnostic.
const std::vector<CatalogEntry>& thirteen();

/// Catalog lookup by key; also accepts "w8". Throws invalid_input for
/// unknown names.
Graph by_name(const std::string& key);

std::vector<std::string> catalog_keys();  // the 13 keys plus "w8"

}  // namespace pstlab
