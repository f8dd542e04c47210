#include <doctest.h>

#include <cmath>
#include <random>

#include "pstlab/catalog.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/spectral.hpp"

using namespace pstlab;

namespace {

/// Test-side oracle: expand prod (x - root_k) directly.
IntPoly expand_from_roots(const std::vector<long>& roots) {
  IntPoly p{1};
  for (long r : roots) p = poly_mul(p, IntPoly{-r, 1});
  return p;
}

double eigen_residual(const Graph& g, const EigenDecomposition& dec) {
  double worst = 0.0;
  for (int i = 0; i < dec.n; ++i)
    for (int k = 0; k < dec.n; ++k) {
      double av = 0.0;
      for (int j = 0; j < dec.n; ++j)
        if (g.adj0(i, j)) av += dec.vec(j, k);
      worst = std::max(worst, std::abs(av - dec.values[k] * dec.vec(i, k)));
    }
  return worst;
}

double orthonormality_defect(const EigenDecomposition& dec) {
  double worst = 0.0;
  for (int a = 0; a < dec.n; ++a)
    for (int b = 0; b < dec.n; ++b) {
      double dot = 0.0;
      for (int r = 0; r < dec.n; ++r) dot += dec.vec(r, a) * dec.vec(r, b);
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

}  // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("eigendecompose K4") {
  const EigenDecomposition dec = eigendecompose(complete(4));
  CHECK(dec.values[0] == doctest::Approx(3.0).epsilon(1e-12));
  for (int k = 1; k < 4; ++k) CHECK(dec.values[k] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("eigendecompose empty graph is trivial") {
  const EigenDecomposition dec = eigendecompose(Graph::from_edge_list(4, {}));
  for (int k = 0; k < 4; ++k) {
    CHECK(dec.values[k] == 0.0);
    for (int r = 0; r < 4; ++r) CHECK(dec.vec(r, k) == (r == k ? 1.0 : 0.0));
  }
}

TEST_CASE("eigendecompose w graph") {
  const EigenDecomposition dec = eigendecompose(w_graph());
  const double top = 2.0 * std::sqrt(3.0);
  CHECK(std::abs(dec.values[0] - top) < 1e-10);
  CHECK(std::abs(dec.values[7] + top) < 1e-10);
  for (int k = 1; k < 7; ++k) CHECK(std::abs(dec.values[k]) < 1e-10);
}

TEST_CASE("eigendecomposition residuals across the catalog") {
  for (const CatalogEntry& entry : thirteen()) {
    const EigenDecomposition dec = eigendecompose(entry.graph);
    CHECK(eigen_residual(entry.graph, dec) <= 1e-10);
    CHECK(orthonormality_defect(dec) <= 1e-12);
  }
}

TEST_CASE("char_poly small oracles") {
  CHECK(char_poly(path(2)) == IntPoly{-1, 0, 1});  // x^2 - 1
  // oracle: (x-2)(x+1)^2 expanded by hand gives x^3 - 3x - 2
  CHECK(char_poly(cycle(3)) == expand_from_roots({2, -1, -1}));
  CHECK(char_poly(cycle(3)) == IntPoly{-2, -3, 0, 1});
  CHECK(char_poly(path(1)) == IntPoly{0, 1});  // single vertex: x
}

TEST_CASE("char_poly Petersen matches the expanded certified roots") {
  // oracle: brute-force expansion of (x-3)(x-1)^5(x+2)^4
  const IntPoly expected = expand_from_roots({3, 1, 1, 1, 1, 1, -2, -2, -2, -2});
  CHECK(char_poly(generalized_petersen(5, 2)) == expected);
}

TEST_CASE("char_poly structural coefficients") {
  for (const CatalogEntry& entry : thirteen()) {
    const IntPoly p = char_poly(entry.graph);
    const int n = entry.graph.order();
    REQUIRE(static_cast<int>(p.size()) == n + 1);
    CHECK(p[n] == 1);                              // monic
    CHECK(p[n - 1] == 0);                          // zero trace
    CHECK(p[n - 2] == -entry.graph.edge_count());  // -|E|
  }
}

TEST_CASE("integral_certificate catalog spot checks") {
  const IntegralityResult k33 = integral_certificate(complete_bipartite(3, 3));
  REQUIRE(k33.is_integral());
  CHECK(k33.certificate->roots ==
        std::vector<std::pair<long, int>>{{3, 1}, {0, 4}, {-3, 1}});

  const IntegralityResult dk23 = integral_certificate(by_name("dk23"));
  REQUIRE(dk23.is_integral());
  CHECK(dk23.certificate->roots ==
        std::vector<std::pair<long, int>>{
            {3, 1}, {2, 1}, {1, 2}, {0, 2}, {-1, 2}, {-2, 1}, {-3, 1}});
}

TEST_CASE("w graph is not integral with residual x^2 - 12") {
  const IntegralityResult res = integral_certificate(w_graph());
  CHECK(!res.is_integral());
  CHECK(res.residual == IntPoly{-12, 0, 1});
  CHECK(format_poly(res.residual) == "x^2 - 12");
}

TEST_CASE("certificates agree with numerical eigenvalues") {
  for (const CatalogEntry& entry : thirteen()) {
    const EigenDecomposition dec = eigendecompose(entry.graph);
    const IntegralCertificate cert = *integral_certificate(entry.graph).certificate;
    std::size_t k = 0;
    for (const auto& [lambda, mult] : cert.roots)
      for (int m = 0; m < mult; ++m, ++k)
        CHECK(std::abs(dec.values[k] - static_cast<double>(lambda)) < 1e-8);
    CHECK(k == static_cast<std::size_t>(dec.n));
  }
}

TEST_CASE("Newton identity checks on every certificate") {
  for (const CatalogEntry& entry : thirteen()) {
    const IntegralCertificate cert = *integral_certificate(entry.graph).certificate;
    long sum = 0, sum_sq = 0, total = 0;
    for (const auto& [lambda, mult] : cert.roots) {
      sum += mult * lambda;
      sum_sq += mult * lambda * lambda;
      total += mult;
    }
    CHECK(total == entry.graph.order());
    CHECK(sum == 0);
    CHECK(sum_sq == 2 * entry.graph.edge_count());
  }
}

TEST_CASE("charpoly vanishes exactly at certified roots") {
  for (const CatalogEntry& entry : thirteen()) {
    const IntegralCertificate cert = *integral_certificate(entry.graph).certificate;
    for (const auto& [lambda, mult] : cert.roots)
      CHECK(poly_eval(cert.charpoly, Int(lambda)) == 0);
  }
}

TEST_CASE("rational projectors: Petersen top eigenvalue is uniform") {
  const Graph petersen = generalized_petersen(5, 2);
  const auto cert = *integral_certificate(petersen).certificate;
  const auto projectors = rational_projectors(petersen, cert);
  REQUIRE(projectors.size() == 3);
  CHECK(projectors[0].lambda == 3);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) CHECK(projectors[0].at(i, j) == Rat(1, 10));
}

TEST_CASE("rational projectors: K33 zero eigenspace from the rank-one oracle") {
  const Graph k33 = complete_bipartite(3, 3);
  const auto cert = *integral_certificate(k33).certificate;
  const auto projectors = rational_projectors(k33, cert);
  REQUIRE(projectors.size() == 3);

  // oracle: E_{+3} and E_{-3} are rank one with +-1/6 entries; E_0 is their
  // complement in the identity.
  RatMat oracle = RatMat::identity(6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const bool same_side = (i < 3) == (j < 3);
      oracle(i, j) -= Rat(1, 6);                       // E_3 entry
      oracle(i, j) -= same_side ? Rat(1, 6) : Rat(-1, 6);  // E_{-3} entry
    }
  const RationalProjector& e0 = projectors[1];
  REQUIRE(e0.lambda == 0);
  CHECK(e0.entries == oracle);
  CHECK(e0.at(0, 0) == Rat(2, 3));
  CHECK(e0.at(0, 1) == Rat(-1, 3));  // same side
  CHECK(e0.at(0, 3) == 0);           // across
}

TEST_CASE("projector algebra is exact across the catalog") {
  for (const CatalogEntry& entry : thirteen()) {
    if (entry.graph.order() > 12) continue;  // the full sweep lives in acceptance
    const auto cert = *integral_certificate(entry.graph).certificate;
    const auto projectors = rational_projectors(entry.graph, cert);
    const int n = entry.graph.order();

    RatMat sum(n), weighted(n);
    for (const auto& proj : projectors)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          sum(i, j) += proj.at(i, j);
          weighted(i, j) += Rat(proj.lambda) * proj.at(i, j);
        }
    CHECK(sum == RatMat::identity(n));
    RatMat adjacency(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) adjacency(i, j) = entry.graph.adj0(i, j) ? 1 : 0;
    CHECK(weighted == adjacency);

    for (std::size_t r = 0; r < projectors.size(); ++r)
      for (std::size_t s = r + 1; s < projectors.size(); ++s)
        CHECK((projectors[r].entries * projectors[s].entries).is_zero());
  }
}

TEST_CASE("rational_projectors rejects malformed certificates") {
  const Graph k4 = complete(4);
  IntegralCertificate bad = *integral_certificate(k4).certificate;
  bad.roots = {{3, 1}, {3, 1}, {-1, 2}};
  CHECK_THROWS_AS(rational_projectors(k4, bad), invalid_input);
}

TEST_CASE("random graphs: charpoly structure and root consistency") {
  std::mt19937 rng(314);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng() % 2) edges.emplace_back(i, j);
    const Graph g = Graph::from_edge_list(n, edges);

    const IntPoly p = char_poly(g);
    REQUIRE(static_cast<int>(p.size()) == n + 1);
    CHECK(p[n] == 1);
    CHECK(p[n - 1] == 0);
    CHECK(p[n - 2] == -g.edge_count());

    // charpoly evaluated near every numerical eigenvalue is near zero
    const EigenDecomposition dec = eigendecompose(g);
    for (double lambda : dec.values) {
      double value = 0.0, power = 1.0;
      for (const Int& c : p) {
        value += c.get_d() * power;
        power *= lambda;
      }
      CHECK(std::abs(value) < 1e-6);
    }

    const IntegralityResult res = integral_certificate(g);
    if (res.is_integral()) {
      int total = 0;
      for (const auto& [lambda, mult] : res.certificate->roots) total += mult;
      CHECK(total == n);
    } else {
      CHECK(res.residual.size() >= 3);  // a non-splitting factor has degree >= 2
    }
  }
}

TEST_CASE("format_poly rendering") {
  CHECK(format_poly(IntPoly{-1, 0, 1}) == "x^2 - 1");
  CHECK(format_poly(IntPoly{-2, -3, 0, 1}) == "x^3 - 3*x - 2");
  CHECK(format_poly(IntPoly{0, 1}) == "x");
  CHECK(format_poly(IntPoly{5}) == "5");
  CHECK(format_poly(IntPoly{0}) == "0");
}

TEST_CASE("format_certificate blocks") {
  const std::string integral = format_certificate(integral_certificate(complete(4)));
  CHECK(integral.find("integral") == 0);
  CHECK(integral.find("3 1") != std::string::npos);
  CHECK(integral.find("-1 3") != std::string::npos);
  const std::string non = format_certificate(integral_certificate(w_graph()));
  CHECK(non.find("not integral; residual x^2 - 12") != std::string::npos);
}

TEST_SUITE_END();
