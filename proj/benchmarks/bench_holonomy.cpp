#include <benchmark/benchmark.h>

#include "holo/holonomy.hpp"
#include "holo/operators.hpp"
#include "holo/workbench.hpp"

using namespace holo;
using CE = CommutatorExpr;

static void BM_ComposeGenerators(benchmark::State &state) {
  const int K = static_cast<int>(state.range(0));
  auto f = generator_holonomy(1, K), g = generator_holonomy(2, K);
  for (auto _ : state)
    benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_ComposeGenerators)->DenseRange(2, 6);

static void BM_Inverse(benchmark::State &state) {
  const int K = static_cast<int>(state.range(0));
  auto f = generator_holonomy(1, K);
  for (auto _ : state)
    benchmark::DoNotOptimize(inverse(f));
}
BENCHMARK(BM_Inverse)->DenseRange(2, 6);

static void BM_GroupCommutator(benchmark::State &state) {
  const int K = static_cast<int>(state.range(0));
  auto f = generator_holonomy(1, K), g = generator_holonomy(2, K);
  for (auto _ : state)
    benchmark::DoNotOptimize(group_commutator(f, g));
}
BENCHMARK(BM_GroupCommutator)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_NestedCommutatorHolonomy(benchmark::State &state) {
  CE e = CE::commutator(CE::leaf(1), CE::commutator(CE::leaf(2), CE::commutator(CE::leaf(1), CE::leaf(3))));
  for (auto _ : state)
    benchmark::DoNotOptimize(universal_holonomy(e, 6));
}
BENCHMARK(BM_NestedCommutatorHolonomy)->Unit(benchmark::kMillisecond);

static void BM_ToeplitzMatrix(benchmark::State &state) {
  const int K = static_cast<int>(state.range(0));
  auto f = universal_holonomy(Word({{1, 1}, {2, 1}}), K);
  for (auto _ : state)
    benchmark::DoNotOptimize(toeplitz_matrix(f));
}
BENCHMARK(BM_ToeplitzMatrix)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Example(benchmark::State &state) {
  const char *names[] = {"generic", "triangle", "square"};
  auto t = template_by_name(names[state.range(0)]);
  for (auto _ : state)
    benchmark::DoNotOptimize(diagonal_stabilization(t, 1, 6, 1));
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_Example)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
