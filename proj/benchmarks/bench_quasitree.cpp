#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "cubulate/bbf.hpp"
#include "cubulate/fixtures.hpp"
#include "cubulate/quasigeodesic.hpp"

namespace {

using namespace cubulate;

ProjectionSystem axes_system(int n, int lines, std::uint64_t seed) {
  const fixtures::TreeAxes t = fixtures::random_tree_axes(n, lines, seed);
  return axes_in_tree_system(t.tree, t.axes);
}

void BM_VerifyAxioms(benchmark::State& state) {
  const ProjectionSystem s = axes_system(static_cast<int>(state.range(0)), 8, 3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_projection_axioms(s).least_theta);
}
BENCHMARK(BM_VerifyAxioms)->Arg(100)->Arg(300);

void BM_BuildQuasiTree(benchmark::State& state) {
  const ProjectionSystem s = axes_system(static_cast<int>(state.range(0)), 8, 3);
  for (auto _ : state) {
    QuasiTreeSpace q(s, 50, 1);
    benchmark::DoNotOptimize(q.size());
  }
}
BENCHMARK(BM_BuildQuasiTree)->Arg(100)->Arg(300);

void BM_DistanceFormula(benchmark::State& state) {
  const QuasiTreeSpace q(axes_system(200, 8, 5), 50, 1);
  std::vector<std::pair<int, int>> pairs;
  SeededRng rng(1);
  for (int i = 0; i < 200; ++i) pairs.emplace_back(rng.uniform(0, q.size() - 1), rng.uniform(0, q.size() - 1));
  for (auto _ : state) benchmark::DoNotOptimize(check_bbf_distance_formula(q, 51, pairs).upper_failures);
}
BENCHMARK(BM_DistanceFormula);

void BM_LeastQuasigeodesicConstant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // out and back along a line: the worst case for the reparametrisation
  auto dist = [n](int s, int t) {
    auto pos = [n](int i) { return i <= n / 2 ? i : n - i; };
    const int a = pos(s), b = pos(t);
    return Rational(a > b ? a - b : b - a);
  };
  for (auto _ : state) benchmark::DoNotOptimize(least_quasigeodesic_constant(n + 1, dist));
}
BENCHMARK(BM_LeastQuasigeodesicConstant)->RangeMultiplier(2)->Range(16, 128);

}  // namespace
