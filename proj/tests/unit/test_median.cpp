#include <doctest.h>

#include <algorithm>

#include "cubulate/fixtures.hpp"
#include "cubulate/median.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace cubulate;

TEST_CASE("median recognition on the named fixtures") {
  CHECK(is_median_graph(fixtures::hypercube(3)).is_median);
  CHECK(is_median_graph(fixtures::grid_graph(3, 4)).is_median);
  const MedianVerdict c6 = is_median_graph(fixtures::cycle_graph(6));
  CHECK_FALSE(c6.is_median);
  REQUIRE(c6.witness);
  const oracle::Matrix d = oracle::floyd_warshall(fixtures::cycle_graph(6));
  const auto& w = *c6.witness;
  CHECK(static_cast<int>(oracle::medians(d, w[0], w[1], w[2]).size()) == c6.witness_median_count);
  CHECK(c6.witness_median_count != 1);
  CHECK_FALSE(is_median_graph(fixtures::complete_bipartite(2, 3)).is_median);
  CHECK(is_median_graph(fixtures::complete_bipartite(1, 4)).is_median);
  CHECK(is_median_graph(UnitGraph(1, {})).is_median);
}

TEST_CASE("median recognition agrees with the all-triples oracle on small graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const UnitGraph& g : oracle::all_connected_graphs(n)) REQUIRE(is_median_graph(g).is_median == oracle::is_median(g));
  }
}

TEST_CASE("verified algebra rejects non-median graphs") {
  CHECK(error_code_of([] { MedianAlgebra::verified(fixtures::cycle_graph(6)); }) == ErrorCode::not_median);
}

TEST_CASE("median symmetry and absorption") {
  const std::vector<UnitGraph> graphs{fixtures::hypercube(3), fixtures::grid_graph(4, 5), fixtures::spider(3, 4)};
  for (const UnitGraph& g : graphs) {
    const MedianAlgebra m = MedianAlgebra::verified(g);
    const oracle::Matrix d = oracle::floyd_warshall(g);
    for (int x = 0; x < m.size(); ++x) {
      for (int y = 0; y < m.size(); ++y) {
        REQUIRE(m.median(x, x, y) == x);
        for (int z = 0; z < m.size(); ++z) {
          const Vertex v = m.median(x, y, z);
          REQUIRE(v == m.median(z, x, y));
          REQUIRE(v == m.median(y, z, x));
          REQUIRE(v == m.median(y, x, z));
          REQUIRE(oracle::medians(d, x, y, z) == std::vector<Vertex>{v});
        }
      }
    }
  }
}

TEST_CASE("walk median matches the oracle on median graphs") {
  SeededRng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const UnitGraph g = fixtures::random_tree_product(rng, 3, 120);
    const DistanceMatrix dm = all_pairs_distances(g);
    const oracle::Matrix d = oracle::floyd_warshall(g);
    for (int s = 0; s < 50; ++s) {
      const Vertex x = rng.uniform(0, g.size() - 1);
      const Vertex y = rng.uniform(0, g.size() - 1);
      const Vertex z = rng.uniform(0, g.size() - 1);
      REQUIRE(oracle::medians(d, x, y, z) == std::vector<Vertex>{walk_median(g, dm, x, y, z)});
    }
  }
}

TEST_CASE("product of trees: coordinates, distances and medians") {
  SeededRng rng(8);
  std::vector<UnitGraph> factors{fixtures::random_tree(5, rng), fixtures::path_graph(3), fixtures::star(3)};
  const MedianAlgebra m = MedianAlgebra::product_of_trees(factors);
  CHECK(m.is_product());
  CHECK(m.size() == 5 * 3 * 4);
  const oracle::Matrix d = oracle::floyd_warshall(m.graph());
  for (int v = 0; v < m.size(); ++v) {
    const auto c = m.coordinates(v);
    REQUIRE(m.from_coordinates(c) == v);
    for (int w = 0; w < m.size(); ++w) REQUIRE(m.distance(v, w) == d[v][w]);
  }
  for (int s = 0; s < 200; ++s) {
    const Vertex x = rng.uniform(0, m.size() - 1);
    const Vertex y = rng.uniform(0, m.size() - 1);
    const Vertex z = rng.uniform(0, m.size() - 1);
    REQUIRE(oracle::medians(d, x, y, z) == std::vector<Vertex>{m.median(x, y, z)});
  }
  CHECK(error_code_of([] { MedianAlgebra::product_of_trees({fixtures::cycle_graph(4)}); }) == ErrorCode::precondition);
  CHECK(error_code_of([] { MedianAlgebra::product_of_trees({fixtures::path_graph(100), fixtures::path_graph(100)}); }) ==
        ErrorCode::guard_exceeded);
}

TEST_CASE("closure is the least median-closed superset") {
  SeededRng rng(21);
  const MedianAlgebra m = MedianAlgebra::verified(fixtures::grid_graph(5, 5));
  const oracle::Matrix d = oracle::floyd_warshall(m.graph());
  for (int trial = 0; trial < 30; ++trial) {
    VertexSet a;
    for (int i = 0; i < 4; ++i) a.push_back(rng.uniform(0, m.size() - 1));
    a = make_vertex_set(a);
    const VertexSet c = subalgebra_closure(m, a);
    CHECK(is_subset(a, c));
    CHECK(is_median_closed(m, c));
    CHECK(subalgebra_closure(m, c) == c);
    // Least: brute-force saturation gives the same set.
    VertexSet ref = a;
    for (bool grew = true; grew;) {
      grew = false;
      for (Vertex x : VertexSet(ref)) {
        for (Vertex y : VertexSet(ref)) {
          for (Vertex z : VertexSet(ref)) {
            const Vertex v = oracle::medians(d, x, y, z).front();
            if (!contains(ref, v)) {
              ref = make_vertex_set([&] { auto r = ref; r.push_back(v); return r; }());
              grew = true;
            }
          }
        }
      }
    }
    CHECK(ref == c);
  }
}

TEST_CASE("c-connectivity") {
  const MedianAlgebra m = MedianAlgebra::verified(fixtures::grid_graph(5, 5));
  const VertexSet diag{0, 6, 12, 18, 24};
  CHECK_FALSE(is_c_connected(m, diag, 1));
  CHECK(is_c_connected(m, diag, 2));
}

TEST_CASE("connectify and close a grid diagonal") {
  const MedianAlgebra m = MedianAlgebra::verified(fixtures::grid_graph(5, 5));
  const VertexSet diag{0, 6, 12, 18, 24};
  const ConnectifyResult r = connectify_and_close(m, diag, 2);
  CHECK(r.one_connected);
  CHECK(is_median_closed(m, r.closure));
  CHECK(is_subset(diag, r.closure));
  CHECK(r.bridges.size() == 4);
  // Exact Hausdorff distance by brute force.
  const oracle::Matrix d = oracle::floyd_warshall(m.graph());
  int haus = 0;
  for (Vertex v : r.closure) {
    int best = oracle::kInf;
    for (Vertex a : diag) best = std::min(best, d[v][a]);
    haus = std::max(haus, best);
  }
  CHECK(r.hausdorff == haus);
  CHECK(r.hausdorff <= 4);
  CHECK(error_code_of([&] { connectify_and_close(m, diag, 1); }) == ErrorCode::precondition);
}

TEST_CASE("median subset report") {
  const MedianAlgebra m = MedianAlgebra::verified(fixtures::grid_graph(4, 4));
  const SubsetReport r = median_subset_report(m, {0, 15}, 6, 3);
  CHECK(r.is_c_connected);
  CHECK(r.closure == VertexSet{0, 15});
  CHECK(r.hausdorff_to_closure == 0);
  const SubsetReport s = median_subset_report(m, {3, 12, 15}, 6, 3);
  CHECK(contains(s.closure, 15));
  CHECK(s.minimal_m >= 0);
}

TEST_CASE("isometric subalgebra check") {
  const MedianAlgebra m = MedianAlgebra::verified(fixtures::grid_graph(4, 4));
  const VertexSet row{0, 1, 2, 3};
  CHECK(check_isometric_subalgebra(m, row).isometric);
  CHECK(error_code_of([&] { check_isometric_subalgebra(m, {0, 2}); }) == ErrorCode::precondition);
  const MedianAlgebra sub = MedianAlgebra::subalgebra(m, {0, 1, 4, 5, 8});
  CHECK(sub.size() == 5);
  CHECK(sub.distance(0, 4) == 2);
}

TEST_CASE("hausdorff distance matches brute force") {
  SeededRng rng(2);
  const UnitGraph g = fixtures::grid_graph(6, 6);
  const oracle::Matrix d = oracle::floyd_warshall(g);
  for (int trial = 0; trial < 30; ++trial) {
    VertexSet a, b;
    for (int i = 0; i < 3; ++i) {
      a.push_back(rng.uniform(0, 35));
      b.push_back(rng.uniform(0, 35));
    }
    a = make_vertex_set(a);
    b = make_vertex_set(b);
    auto one = [&](const VertexSet& from, const VertexSet& to) {
      int h = 0;
      for (Vertex v : from) {
        int best = oracle::kInf;
        for (Vertex w : to) best = std::min(best, d[v][w]);
        h = std::max(h, best);
      }
      return h;
    };
    CHECK(one_sided_hausdorff(g, a, b) == one(a, b));
    CHECK(hausdorff_distance(g, a, b) == std::max(one(a, b), one(b, a)));
  }
}
