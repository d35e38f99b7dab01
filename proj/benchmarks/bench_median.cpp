#include <benchmark/benchmark.h>

#include "cubulate/fixtures.hpp"
#include "cubulate/median.hpp"

namespace {

using namespace cubulate;

void BM_IsMedianGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UnitGraph g = fixtures::grid_graph(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(is_median_graph(g).is_median);
  state.SetComplexityN(static_cast<std::int64_t>(n) * n);
}
BENCHMARK(BM_IsMedianGrid)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_IsMedianHypercube(benchmark::State& state) {
  const UnitGraph g = fixtures::hypercube(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_median_graph(g).is_median);
}
BENCHMARK(BM_IsMedianHypercube)->DenseRange(3, 7);

void BM_SubalgebraClosure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MedianAlgebra m = MedianAlgebra::verified(fixtures::grid_graph(n, n));
  VertexSet diag;
  for (int i = 0; i < n; ++i) diag.push_back(i * n + i);
  diag.push_back(n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(subalgebra_closure(m, make_vertex_set(diag)));
}
BENCHMARK(BM_SubalgebraClosure)->DenseRange(4, 12, 4);

void BM_ConnectifyDiagonal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MedianAlgebra m = MedianAlgebra::verified(fixtures::grid_graph(n, n));
  VertexSet diag;
  for (int i = 0; i < n; ++i) diag.push_back(i * n + i);
  for (auto _ : state) benchmark::DoNotOptimize(connectify_and_close(m, diag, 2).hausdorff);
}
BENCHMARK(BM_ConnectifyDiagonal)->DenseRange(4, 12, 4);

}  // namespace
