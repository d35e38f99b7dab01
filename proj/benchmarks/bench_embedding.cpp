#include <benchmark/benchmark.h>

#include <array>

#include "cubulate/embedding.hpp"
#include "cubulate/fixtures.hpp"

namespace {

using namespace cubulate;

void BM_PsiProductLines(benchmark::State& state) {
  const Hierarchy h(fixtures::product_lines_instance(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    const ColouredSystem cs = build_coloured_system(h, find_bbf_colouring(h), default_parameters(h.e()));
    benchmark::DoNotOptimize(psi_map(cs).psi.size());
  }
}
BENCHMARK(BM_PsiProductLines)->Arg(9)->Arg(20);

void BM_ValidateTreeWithAxes(benchmark::State& state) {
  const Hierarchy h(fixtures::random_tree_with_axes(static_cast<int>(state.range(0)), 4, 7));
  for (auto _ : state) benchmark::DoNotOptimize(validate_instance(h).least_e);
}
BENCHMARK(BM_ValidateTreeWithAxes)->Arg(40)->Arg(120);

void BM_QuasimedianDefect(benchmark::State& state) {
  const Hierarchy h(fixtures::random_tree_with_axes(40, 3, 2));
  const ColouredSystem cs = build_coloured_system(h, find_bbf_colouring(h), default_parameters(h.e()));
  const PsiImage psi = psi_map(cs);
  std::vector<std::array<Vertex, 3>> triples;
  SeededRng rng(4);
  for (int i = 0; i < 100; ++i) triples.push_back({rng.uniform(0, 39), rng.uniform(0, 39), rng.uniform(0, 39)});
  for (auto _ : state) benchmark::DoNotOptimize(quasimedian_defect(cs, psi, triples).max_defect);
}
BENCHMARK(BM_QuasimedianDefect);

void BM_Pipeline(benchmark::State& state) {
  const Hierarchy h(fixtures::random_tree_with_axes(static_cast<int>(state.range(0)), 3, 4));
  const ColouredSystem cs = build_coloured_system(h, find_bbf_colouring(h), default_parameters(h.e()));
  const PsiImage psi = psi_map(cs);
  for (auto _ : state) benchmark::DoNotOptimize(build_pipeline(cs, psi).promotion.hausdorff);
}
BENCHMARK(BM_Pipeline)->Arg(12)->Arg(20);

}  // namespace
