#include <doctest.h>

#include <algorithm>

#include "cubulate/cube_complex.hpp"
#include "cubulate/fixtures.hpp"
#include "cubulate/median.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace cubulate;

namespace {

std::vector<UnitGraph> median_fixtures() {
  SeededRng rng(17);
  std::vector<UnitGraph> out{fixtures::path_graph(1), fixtures::path_graph(6), fixtures::star(4),   fixtures::spider(3, 3),
                             fixtures::hypercube(3),  fixtures::hypercube(4),  fixtures::grid_graph(3, 5)};
  for (int i = 0; i < 6; ++i) out.push_back(fixtures::random_tree_product(rng, 3, 60));
  return out;
}

VertexSet random_subset(SeededRng& rng, int n, int k) {
  VertexSet s;
  for (int i = 0; i < k; ++i) s.push_back(rng.uniform(0, n - 1));
  return make_vertex_set(s);
}

}  // namespace

TEST_CASE("hyperplanes are the djokovic-winkler classes") {
  for (const UnitGraph& g : median_fixtures()) {
    const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(g));
    const auto ref = oracle::djokovic_classes(g);
    REQUIRE(ref);
    CHECK(c.edge_classes() == *ref);
    for (std::size_t h = 0; h < c.hyperplanes().size(); ++h) {
      const Hyperplane& hp = c.hyperplanes()[h];
      CHECK(hp.left.size() + hp.right.size() == static_cast<std::size_t>(g.size()));
      CHECK(contains(hp.left, 0));
    }
  }
}

TEST_CASE("dimension of standard complexes") {
  CHECK(hyperplane_decomposition(MedianAlgebra::verified(fixtures::hypercube(3))).dimension() == 3);
  CHECK(hyperplane_decomposition(MedianAlgebra::verified(fixtures::hypercube(5))).dimension() == 5);
  CHECK(hyperplane_decomposition(MedianAlgebra::verified(fixtures::grid_graph(4, 6))).dimension() == 2);
  CHECK(hyperplane_decomposition(MedianAlgebra::verified(fixtures::spider(5, 2))).dimension() == 1);
  CHECK(hyperplane_decomposition(MedianAlgebra::verified(fixtures::path_graph(1))).dimension() == 0);
  const CubeSkeleton grid = hyperplane_decomposition(MedianAlgebra::verified(fixtures::grid_graph(2, 3)));
  // columns cross rows, columns are nested among themselves
  int crossings = 0;
  for (std::size_t a = 0; a < grid.hyperplanes().size(); ++a) {
    for (std::size_t b = a + 1; b < grid.hyperplanes().size(); ++b) crossings += grid.crossing(static_cast<int>(a), static_cast<int>(b));
  }
  CHECK(crossings == 2);
}

TEST_CASE("convex hulls agree with interval closure") {
  SeededRng rng(4);
  for (const UnitGraph& g : median_fixtures()) {
    const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(g));
    const oracle::Matrix d = oracle::floyd_warshall(g);
    for (int trial = 0; trial < 15; ++trial) {
      const VertexSet s = random_subset(rng, g.size(), rng.uniform(1, 4));
      const VertexSet hull = convex_hull(c, s);
      REQUIRE(hull == oracle::convex_hull(d, s));
      CHECK(interval_closure(c.median().distances(), s) == hull);
      CHECK(is_convex(c, hull));
      CHECK(is_convex(c, s) == oracle::is_convex(d, s));
    }
  }
  const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(fixtures::hypercube(2)));
  CHECK(error_code_of([&] { convex_hull(c, {}); }) == ErrorCode::precondition);
}

TEST_CASE("gate is the unique nearest point") {
  SeededRng rng(9);
  const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(fixtures::grid_graph(5, 6)));
  const oracle::Matrix d = oracle::floyd_warshall(c.graph());
  for (int trial = 0; trial < 40; ++trial) {
    const VertexSet z = convex_hull(c, random_subset(rng, 30, 2));
    const Vertex x = rng.uniform(0, 29);
    const Vertex g = gate(c.median(), z, x);
    CHECK(contains(z, g));
    for (Vertex v : z) {
      if (v != g) CHECK(d[x][v] > d[x][g]);
    }
  }
}

TEST_CASE("hull of a neighbourhood stays within dimension times r") {
  SeededRng rng(13);
  for (const UnitGraph& g : median_fixtures()) {
    const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(g));
    for (int r = 1; r <= 3; ++r) {
      const VertexSet z = convex_hull(c, random_subset(rng, g.size(), 2));
      const HullNeighbourhoodResult res = hull_neighbourhood_check(c, z, r);
      CHECK(res.holds);
      CHECK(res.max_excess <= 0);
      CHECK(res.dimension == c.dimension());
      CHECK(is_convex(c, res.hull));
    }
  }
  const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(fixtures::grid_graph(3, 3)));
  CHECK(error_code_of([&] { hull_neighbourhood_check(c, {0, 8}, 1); }) == ErrorCode::not_convex);
}

TEST_CASE("neighbourhoods") {
  const UnitGraph g = fixtures::path_graph(7);
  CHECK(neighbourhood(g, {3}, 2) == VertexSet{1, 2, 3, 4, 5});
  CHECK(neighbourhood(g, {0, 6}, 0) == VertexSet{0, 6});
}

TEST_CASE("helly: pairwise intersecting convex sets share a point") {
  SeededRng rng(23);
  for (const UnitGraph& g : median_fixtures()) {
    const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(g));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<VertexSet> family;
      const int k = rng.uniform(2, 5);
      for (int i = 0; i < k; ++i) family.push_back(convex_hull(c, random_subset(rng, g.size(), 3)));
      const HellyResult h = helly_intersection(c, family);
      bool pairwise = true;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) pairwise = pairwise && !set_intersection(family[i], family[j]).empty();
      }
      CHECK(pairwise == h.point.has_value());
      if (h.point) {
        for (const VertexSet& f : family) CHECK(contains(f, *h.point));
      } else {
        REQUIRE(h.disjoint_pair);
        CHECK(set_intersection(family[h.disjoint_pair->first], family[h.disjoint_pair->second]).empty());
      }
    }
  }
  const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(fixtures::grid_graph(3, 3)));
  CHECK(error_code_of([&] { helly_intersection(c, {{0, 1}, {0, 8}}); }) == ErrorCode::not_convex);
}

TEST_CASE("coherent orientations match exhaustive enumeration") {
  SeededRng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Wallspace w;
    w.points = rng.uniform(2, 7);
    const int walls = rng.uniform(1, 6);
    while (static_cast<int>(w.walls.size()) < walls) {
      Wall wall;
      for (int p = 0; p < w.points; ++p) (rng.coin() ? wall.left : wall.right).push_back(p);
      if (!wall.left.empty() && !wall.right.empty()) w.walls.push_back(std::move(wall));
    }
    auto got = coherent_orientations(w);
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::consistent_orientations(w));
    for (const Orientation& o : got) CHECK(is_coherent(w, o));
    for (int p = 0; p < w.points; ++p) CHECK(is_coherent(w, principal_orientation(w, p)));
  }
  CHECK(error_code_of([] { coherent_orientations(fixtures::cube_wallspace(6), 10); }) == ErrorCode::guard_exceeded);
}

TEST_CASE("wallspace validation") {
  CHECK(error_code_of([] { validate_wallspace({3, {{{0}, {1}}}}); }) == ErrorCode::malformed_input);
  CHECK(error_code_of([] { validate_wallspace({2, {{{0, 1}, {}}}}); }) == ErrorCode::malformed_input);
  validate_wallspace(fixtures::cube_wallspace(3));
}

TEST_CASE("dual of the cube walls is the cube") {
  const DualComplex d = dual_cube_complex(fixtures::cube_wallspace(3));
  CHECK(d.skeleton.graph().size() == 8);
  CHECK(d.skeleton.dimension() == 3);
  CHECK(oracle::isomorphic(d.skeleton.graph(), fixtures::hypercube(3)));
}

TEST_CASE("dual of hyperplane walls recovers the graph") {
  for (const UnitGraph& g : median_fixtures()) {
    const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(g));
    const DualComplex d = dual_cube_complex(hyperplane_wallspace(c));
    const auto iso = find_isomorphism(g, d.skeleton.graph());
    REQUIRE(iso);
    CHECK(is_isomorphism(g, d.skeleton.graph(), *iso));
  }
}

TEST_CASE("repeated walls are rejected by the dual") {
  Wallspace w = fixtures::cube_wallspace(2);
  w.walls.push_back(w.walls[0]);
  CHECK(error_code_of([&] { dual_cube_complex(w); }) == ErrorCode::precondition);
}

TEST_CASE("isomorphism search agrees with permutation search") {
  SeededRng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform(2, 7);
    const UnitGraph a = oracle::random_connected_graph(n, 0.4, rng);
    UnitGraph b = oracle::random_connected_graph(n, 0.4, rng);
    if (trial % 2 == 0) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng.engine());
      std::vector<Edge> edges;
      for (const Edge& e : a.edges()) edges.emplace_back(perm[e.first], perm[e.second]);
      b = UnitGraph(n, edges);
    }
    const auto iso = find_isomorphism(a, b);
    CHECK(iso.has_value() == oracle::isomorphic(a, b));
    if (iso) CHECK(is_isomorphism(a, b, *iso));
  }
}
