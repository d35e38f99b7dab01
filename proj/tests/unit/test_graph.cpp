#include <doctest.h>

#include "cubulate/fixtures.hpp"
#include "cubulate/graph.hpp"
#include "cubulate/rational.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace cubulate;

TEST_CASE("unit graph rejects bad edge lists") {
  CHECK(error_code_of([] { UnitGraph(3, {{0, 0}}); }) == ErrorCode::malformed_input);
  CHECK(error_code_of([] { UnitGraph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::malformed_input);
  CHECK(error_code_of([] { UnitGraph(3, {{0, 3}}); }) == ErrorCode::malformed_input);
  CHECK(error_code_of([] { UnitGraph(0, {}); }) == ErrorCode::malformed_input);
}

TEST_CASE("edges are normalised and sorted") {
  UnitGraph g(4, {{3, 2}, {1, 0}, {2, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.adjacent(2, 3));
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK(g.degree(1) == 2);
}

TEST_CASE("all-pairs distances agree with floyd-warshall") {
  SeededRng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const UnitGraph g = oracle::random_connected_graph(rng.uniform(2, 14), 0.25, rng);
    const DistanceMatrix d = all_pairs_distances(g);
    const oracle::Matrix ref = oracle::floyd_warshall(g);
    for (int a = 0; a < g.size(); ++a) {
      for (int b = 0; b < g.size(); ++b) REQUIRE(d(a, b) == ref[a][b]);
    }
  }
}

TEST_CASE("disconnected graphs are reported") {
  const UnitGraph g(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(g));
  CHECK(error_code_of([&] { all_pairs_distances(g); }) == ErrorCode::disconnected);
  const Vertex src[] = {0};
  CHECK(bfs_distances(g, src)[3] == -1);
}

TEST_CASE("intervals and geodesics in a grid") {
  const UnitGraph g = fixtures::grid_graph(3, 3);
  const DistanceMatrix d = all_pairs_distances(g);
  CHECK(interval(d, 0, 8).size() == 9);
  CHECK(interval(d, 0, 2) == VertexSet{0, 1, 2});
  const auto path = least_geodesic(g, d, 0, 8);
  CHECK(path == std::vector<Vertex>{0, 1, 2, 5, 8});
  CHECK(geodesic_hull(d, {0, 4}) == VertexSet{0, 1, 3, 4});
  CHECK(set_distance(d, {0, 1}, {7, 8}) == 2);
  CHECK(set_diameter(d, {0, 8}) == 4);
  CHECK(point_to_set(d, 0, {5, 8}) == 3);
}

TEST_CASE("induced components and subgraphs") {
  const UnitGraph g = fixtures::path_graph(6);
  const auto comps = induced_components(g, {0, 1, 3, 4, 5});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1});
  CHECK(comps[1] == VertexSet{3, 4, 5});
  const UnitGraph sub = induced_subgraph(g, {3, 4, 5});
  CHECK(sub.size() == 3);
  CHECK(sub.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("tree detection") {
  SeededRng rng(3);
  for (int n = 1; n < 30; ++n) CHECK(is_tree(fixtures::random_tree(n, rng)));
  CHECK_FALSE(is_tree(fixtures::cycle_graph(5)));
  CHECK(is_tree(fixtures::spider(4, 3)));
}

TEST_CASE("rational parsing and arithmetic") {
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(error_code_of([] { Rational::parse("x"); }) == ErrorCode::malformed_input);
  CHECK(error_code_of([] { Rational(1, 0); }) == ErrorCode::malformed_input);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(5, 2).to_string() == "5/2");
}
