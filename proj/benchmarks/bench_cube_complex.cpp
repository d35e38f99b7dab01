#include <benchmark/benchmark.h>

#include "cubulate/cube_complex.hpp"
#include "cubulate/fixtures.hpp"
#include "cubulate/median.hpp"

namespace {

using namespace cubulate;

void BM_HyperplaneDecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MedianAlgebra m = MedianAlgebra::verified(fixtures::grid_graph(n, n));
  for (auto _ : state) benchmark::DoNotOptimize(hyperplane_decomposition(m).dimension());
}
BENCHMARK(BM_HyperplaneDecomposition)->DenseRange(4, 14, 5);

void BM_DualOfCube(benchmark::State& state) {
  const Wallspace w = fixtures::cube_wallspace(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dual_cube_complex(w).orientations.size());
}
BENCHMARK(BM_DualOfCube)->DenseRange(3, 8);

// hyperplanes -> walls -> dual -> isomorphism, the round trip checked in tests
void BM_DualityRoundTrip(benchmark::State& state) {
  SeededRng rng(static_cast<std::uint64_t>(state.range(0)));
  const UnitGraph g = fixtures::random_tree_product(rng, 3, 150);
  const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(g));
  for (auto _ : state) {
    const DualComplex d = dual_cube_complex(hyperplane_wallspace(c));
    benchmark::DoNotOptimize(find_isomorphism(g, d.skeleton.graph()).has_value());
  }
  state.counters["vertices"] = g.size();
}
BENCHMARK(BM_DualityRoundTrip)->DenseRange(1, 4);

void BM_ConvexHull(benchmark::State& state) {
  const CubeSkeleton c = hyperplane_decomposition(MedianAlgebra::verified(fixtures::hypercube(static_cast<int>(state.range(0)))));
  const VertexSet s{1, 2, 4};
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(c, s).size());
}
BENCHMARK(BM_ConvexHull)->DenseRange(3, 9, 2);

}  // namespace
