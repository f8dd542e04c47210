#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "pstlab/catalog.hpp"
#include "pstlab/errors.hpp"

using namespace pstlab;

TEST_SUITE_BEGIN("catalog");

TEST_CASE("exactly thirteen validated members") {
  const auto& entries = thirteen();
  REQUIRE(entries.size() == 13);
  std::set<std::string> keys;
  for (const CatalogEntry& entry : entries) {
    keys.insert(entry.key);
    CHECK(entry.graph.connected());
    CHECK(entry.graph.regular_degree() == 3);
    CHECK(entry.graph.edge_count() * 2 == 3 * entry.graph.order());
    const IntegralityResult res = integral_certificate(entry.graph);
    REQUIRE(res.is_integral());
    CHECK(res.certificate->roots == entry.expected_spectrum);
  }
  CHECK(keys.size() == 13);  // stable unique keys
}

TEST_CASE("generalized Petersen members") {
  const Graph petersen = generalized_petersen(5, 2);
  CHECK(integral_certificate(petersen).certificate->roots ==
        std::vector<std::pair<long, int>>{{3, 1}, {1, 5}, {-2, 4}});

  const Graph desargues = generalized_petersen(10, 3);
  CHECK(integral_certificate(desargues).certificate->roots ==
        std::vector<std::pair<long, int>>{{3, 1}, {2, 4}, {1, 5}, {-1, 5}, {-2, 4}, {-3, 1}});

  const Graph nauru = generalized_petersen(12, 5);
  CHECK(integral_certificate(nauru).certificate->roots ==
        std::vector<std::pair<long, int>>{
            {3, 1}, {2, 6}, {1, 3}, {0, 4}, {-1, 3}, {-2, 6}, {-3, 1}});

  CHECK_THROWS_AS(generalized_petersen(2, 1), invalid_input);
  CHECK_THROWS_AS(generalized_petersen(8, 4), invalid_input);
}

TEST_CASE("w graph facts") {
  const Graph w = w_graph();
  CHECK(w.degree_sequence() == std::vector<int>{6, 2, 2, 2, 2, 2, 2, 6});
  CHECK(diameter(w) == 2);
  const IntegralityResult res = integral_certificate(w);
  CHECK(!res.is_integral());
  CHECK(format_poly(res.residual) == "x^2 - 12");
  const EigenDecomposition dec = eigendecompose(w);
  CHECK(std::abs(dec.values[0] - 2.0 * std::sqrt(3.0)) < 1e-10);
}

TEST_CASE("desargues mate: cospectral, bipartite, not isomorphic") {
  const Graph mate = mate_desargues();
  const Graph desargues = generalized_petersen(10, 3);
  CHECK(mate.regular_degree() == 3);
  CHECK(integral_certificate(mate).certificate->roots ==
        integral_certificate(desargues).certificate->roots);
  CHECK(bipartition(mate).has_value());

  // the cheap invariant ties here, which forces the exact search
  CHECK(six_cycle_counts(mate) == six_cycle_counts(desargues));
  CHECK(!isomorphic(mate, desargues));
}

TEST_CASE("bipartite members have symmetric spectra and 2-colorings") {
  const std::set<std::string> bipartite_keys{"k33",       "prism6",         "cube",
                                             "dk23",      "desargues",      "desargues-mate",
                                             "nauru",     "tutte-coxeter"};
  for (const CatalogEntry& entry : thirteen()) {
    const bool expect_bipartite = bipartite_keys.count(entry.key) > 0;
    CHECK(bipartition(entry.graph).has_value() == expect_bipartite);
    if (!expect_bipartite) continue;
    auto spectrum = entry.expected_spectrum;
    for (const auto& [lambda, mult] : spectrum) {
      const auto mirror = std::find_if(spectrum.begin(), spectrum.end(),
                                       [l = lambda](const auto& r) { return r.first == -l; });
      REQUIRE(mirror != spectrum.end());
      CHECK(mirror->second == mult);
    }
  }
}

TEST_CASE("tutte-coxeter classes alternate with parity") {
  const Graph tc = by_name("tutte-coxeter");
  CHECK(tc.order() == 30);
  for (const auto& [u, v] : tc.edges()) CHECK(u % 2 != v % 2);
  CHECK(diameter(tc) == 4);
}

TEST_CASE("by_name covers every key and rejects unknowns") {
  for (const std::string& key : catalog_keys()) CHECK(by_name(key).order() >= 4);
  CHECK(by_name("w8").order() == 8);
  CHECK_THROWS_AS(by_name("not-a-graph"), invalid_input);
}

TEST_CASE("hypercube and p3 grid families") {
  CHECK(hypercube(3).order() == 8);
  CHECK(hypercube(5).order() == 32);
  CHECK(p3_grid(2).order() == 9);
  CHECK(p3_grid(3).order() == 27);
  CHECK(diameter(p3_grid(3)) == 6);
}

TEST_SUITE_END();
