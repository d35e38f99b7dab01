#include <doctest.h>

#include "cubulate/fixtures.hpp"
#include "cubulate/quasigeodesic.hpp"
#include "oracles.hpp"

using namespace cubulate;

namespace {

std::vector<std::vector<Rational>> path_distances(const DistanceMatrix& d, const std::vector<Vertex>& path) {
  const int n = static_cast<int>(path.size());
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) out[s][t] = d(path[s], path[t]);
  }
  return out;
}

std::vector<Vertex> random_walk(const UnitGraph& g, int steps, SeededRng& rng) {
  std::vector<Vertex> path{rng.uniform(0, g.size() - 1)};
  for (int i = 0; i < steps; ++i) {
    const auto nb = g.neighbours(path.back());
    path.push_back(nb[rng.uniform(0, static_cast<int>(nb.size()) - 1)]);
  }
  return path;
}

// 0, 1, ..., m, m-1, ..., 0 on a line
std::vector<Vertex> out_and_back(int m) {
  std::vector<Vertex> path;
  for (int i = 0; i <= m; ++i) path.push_back(i);
  for (int i = m - 1; i >= 0; --i) path.push_back(i);
  return path;
}

}  // namespace

TEST_CASE("reparametrisation verdict agrees with floyd-warshall on the constraints") {
  SeededRng rng(7);
  const std::vector<UnitGraph> graphs{fixtures::grid_graph(4, 4), fixtures::cycle_graph(9), fixtures::spider(3, 4)};
  for (const UnitGraph& g : graphs) {
    const DistanceMatrix d = all_pairs_distances(g);
    for (int trial = 0; trial < 25; ++trial) {
      const auto path = random_walk(g, rng.uniform(1, 12), rng);
      const auto pd = path_distances(d, path);
      for (const Rational& dd : {Rational(1), Rational(3, 2), Rational(2), Rational(3)}) {
        const ReparametrisationVerdict v = unparametrised_quasigeodesic_check(d, path, dd);
        REQUIRE(v.holds == oracle::reparametrisation_feasible(pd, dd));
        if (v.holds) {
          CHECK(oracle::reparametrisation_witness_ok(pd, dd, v.times, v.time_scale));
        } else {
          CHECK(v.cycle.size() >= 2);
        }
      }
    }
  }
}

TEST_CASE("geodesics are 1-quasigeodesics") {
  const UnitGraph g = fixtures::grid_graph(5, 5);
  const DistanceMatrix d = all_pairs_distances(g);
  const auto path = least_geodesic(g, d, 0, 24);
  CHECK(is_unparametrised_quasigeodesic(d, path, 1));
  CHECK(is_parametrised_quasigeodesic(d, path, 1));
  const int mu = least_quasigeodesic_constant(static_cast<int>(path.size()), [&](int s, int t) { return Rational(d(path[s], path[t])); });
  CHECK(mu == 1);
}

TEST_CASE("backtracking: short excursions pass, long ones fail") {
  const UnitGraph line = fixtures::path_graph(40);
  const DistanceMatrix d = all_pairs_distances(line);
  int first_failure = -1;
  for (int m = 1; m <= 20; ++m) {
    const auto path = out_and_back(m);
    const bool holds = is_unparametrised_quasigeodesic(d, path, 2);
    CHECK(holds == oracle::reparametrisation_feasible(path_distances(d, path), 2));
    if (!holds && first_failure < 0) first_failure = m;
    if (first_failure >= 0) CHECK_FALSE(holds);
  }
  CHECK(is_unparametrised_quasigeodesic(d, out_and_back(1), 2));
  CHECK(first_failure > 1);
  CHECK(first_failure <= 20);
}

TEST_CASE("least constant is the least feasible integer") {
  SeededRng rng(12);
  const UnitGraph g = fixtures::grid_graph(4, 5);
  const DistanceMatrix d = all_pairs_distances(g);
  for (int trial = 0; trial < 20; ++trial) {
    const auto path = random_walk(g, rng.uniform(2, 10), rng);
    const auto pd = path_distances(d, path);
    const int mu = least_quasigeodesic_constant(static_cast<int>(path.size()), [&](int s, int t) { return pd[s][t]; });
    CHECK(mu >= 1);
    CHECK(oracle::reparametrisation_feasible(pd, mu));
    if (mu > 1) CHECK_FALSE(oracle::reparametrisation_feasible(pd, mu - 1));
  }
}

TEST_CASE("parametrised check") {
  const UnitGraph line = fixtures::path_graph(10);
  const DistanceMatrix d = all_pairs_distances(line);
  CHECK(is_parametrised_quasigeodesic(d, {0, 1, 2, 3}, 1));
  // stalling for a long time breaks the lower bound
  std::vector<Vertex> stall(12, 0);
  stall.push_back(1);
  CHECK_FALSE(is_parametrised_quasigeodesic(d, stall, 2));
  CHECK(is_unparametrised_quasigeodesic(d, stall, 1));
}
