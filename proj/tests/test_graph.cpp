#include <doctest.h>

#include <sstream>

#include "pstlab/catalog.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/graph.hpp"

using namespace pstlab;

TEST_SUITE_BEGIN("graph");

TEST_CASE("from_edge_list basics") {
  const Graph p2 = Graph::from_edge_list(2, {{1, 2}});
  CHECK(p2.order() == 2);
  CHECK(p2.edge_count() == 1);
  CHECK(p2.adjacent(1, 2));

  const Graph empty3 = Graph::from_edge_list(3, {});
  CHECK(empty3.order() == 3);
  CHECK(empty3.edge_count() == 0);

  // duplicates collapse silently
  const Graph dup = Graph::from_edge_list(3, {{1, 2}, {2, 1}, {1, 2}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("from_edge_list rejects bad input with the offending pair") {
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{1, 4}}),
                       doctest::Contains("(1, 4)"), invalid_input);
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{2, 2}}),
                       doctest::Contains("self-loop"), invalid_input);
  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), invalid_input);
}

TEST_CASE("w graph degrees") {
  const Graph w = w_graph();
  // derived by counting incident edges in {1,i},{j,8} for 2 <= i,j <= 7
  CHECK(w.degree_sequence() == std::vector<int>{6, 2, 2, 2, 2, 2, 2, 6});
  CHECK(w.edge_count() == 12);
  CHECK(!w.regular_degree().has_value());
  CHECK(diameter(w) == 2);
}

TEST_CASE("standard families") {
  CHECK(path(1).order() == 1);
  CHECK(path(1).edge_count() == 0);
  CHECK(path(5).edge_count() == 4);
  CHECK(cycle(5).edge_count() == 5);
  CHECK(complete(4).edge_count() == 6);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(diameter(complete_bipartite(3, 3)) == 2);
  CHECK(complete_bipartite(2, 3).degree_sequence() == std::vector<int>{3, 3, 2, 2, 2});
  CHECK_THROWS_AS(cycle(2), invalid_input);
  CHECK_THROWS_AS(path(0), invalid_input);
}

TEST_CASE("cartesian product P2 x P2 is the 4-cycle") {
  const Graph c4 = cartesian_product(path(2), path(2));
  CHECK(c4.order() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.regular_degree() == 2);
  CHECK(c4.connected());
  CHECK(diameter(c4) == 2);
}

TEST_CASE("cartesian product degree additivity") {
  const Graph prism = cartesian_product(cycle(3), path(2));
  CHECK(prism.regular_degree() == 3);
  const Graph big = cartesian_product(cycle(5), cycle(4));
  CHECK(big.regular_degree() == 4);
}

TEST_CASE("power products") {
  const Graph cube = power_product(path(2), 3);
  CHECK(cube.order() == 8);
  CHECK(cube.edge_count() == 12);
  CHECK(cube.regular_degree() == 3);
  CHECK(diameter(cube) == 3);

  const Graph same = power_product(cycle(5), 1);
  CHECK(same.order() == 5);
  CHECK(same.edge_count() == 5);

  const Graph grid = power_product(path(3), 2);
  CHECK(grid.order() == 9);
  CHECK(diameter(grid) == 4);
  auto degrees = grid.degree_sequence();
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{2, 2, 2, 2, 3, 3, 3, 3, 4});
  CHECK(distance(grid, 1, 9) == 4);  // antipodal corners
}

TEST_CASE("distance and diameter") {
  // strongly regular (10,3,0,1): non-adjacent vertices share a neighbour,
  // so the Petersen diameter is 2
  const Graph petersen = generalized_petersen(5, 2);
  CHECK(diameter(petersen) == 2);
  CHECK(distance(petersen, 4, 4) == 0);
  CHECK(distance(power_product(path(2), 4), 1, 16) == 4);

  const Graph disconnected = Graph::from_edge_list(4, {{1, 2}, {3, 4}});
  CHECK(!diameter(disconnected).has_value());
  CHECK(!distance(disconnected, 1, 3).has_value());
  CHECK(!disconnected.connected());
}

TEST_CASE("diameter additivity on path powers up to 243 vertices") {
  for (int k = 1; k <= 5; ++k) {
    CHECK(diameter(power_product(path(2), k)) == k);
    CHECK(diameter(power_product(path(3), k)) == 2 * k);
  }
}

TEST_CASE("regularity") {
  const Graph tc = by_name("tutte-coxeter");
  CHECK(tc.regular_degree() == 3);
  CHECK(Graph::from_edge_list(3, {}).regular_degree() == 0);
}

TEST_CASE("edge list parse and serialize") {
  std::istringstream in(
      "# toy graph\n"
      "4\n"
      "1 2\n"
      "2 3   # trailing comment\n"
      "3 4");
  const Graph g = parse_edge_list(in);
  CHECK(g.order() == 4);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(serialize_edge_list(g) == "4\n1 2\n2 3\n3 4\n");

  std::istringstream bad("3\n1 2 9\n");
  CHECK_THROWS_AS(parse_edge_list(bad), invalid_input);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_edge_list(empty), invalid_input);
}

TEST_CASE("serialize/parse round-trips the whole catalog") {
  for (const CatalogEntry& entry : thirteen()) {
    std::istringstream in(serialize_edge_list(entry.graph));
    const Graph back = parse_edge_list(in);
    CHECK(back.order() == entry.graph.order());
    CHECK(back.edges() == entry.graph.edges());
  }
}

TEST_CASE("bipartition") {
  const auto parts = bipartition(by_name("cube"));
  REQUIRE(parts.has_value());
  CHECK(parts->first.size() == 4);
  CHECK(parts->second.size() == 4);
  CHECK(!bipartition(complete(3)).has_value());
}

TEST_CASE("isomorphism finds relabelings and rejects different graphs") {
  const Graph petersen = generalized_petersen(5, 2);
  // relabel by an arbitrary permutation
  const std::vector<int> perm{3, 7, 1, 10, 5, 2, 9, 4, 8, 6};
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : petersen.edges())
    edges.emplace_back(perm[u - 1], perm[v - 1]);
  const Graph shuffled = Graph::from_edge_list(10, edges);
  CHECK(isomorphic(petersen, shuffled));
  CHECK(!isomorphic(petersen, cycle(10)));
  CHECK(!isomorphic(path(4), path(5)));
}

TEST_SUITE_END();
