// Parallel level sweep vs the serial reference, plus the classifier sweep the
// oracle is compared against.

#include <benchmark/benchmark.h>

#include "trinim/classifier.hpp"
#include "trinim/solver.hpp"
#include "trinim/verify.hpp"

using namespace trinim;

static void BM_SolveSerial(benchmark::State& state) {
  const Count bound = static_cast<Count>(state.range(0));
  const SolveOptions o{.grundy = state.range(1) != 0, .limit = bound};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_triangle_serial(bound, Convention::Normal, o));
  }
  state.counters["positions"] = static_cast<double>(position_count(bound));
}

static void BM_SolveParallel(benchmark::State& state) {
  const Count bound = static_cast<Count>(state.range(0));
  const SolveOptions o{.grundy = state.range(1) != 0, .limit = bound};
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_triangle(bound, Convention::Normal, o));
  }
  state.counters["positions"] = static_cast<double>(position_count(bound));
}

static void BM_ClassifySweep(benchmark::State& state) {
  const Count bound = static_cast<Count>(state.range(0));
  for (auto _ : state) {
    std::size_t p_count = 0;
    for_each_position(bound, [&](const TrianglePosition& p) { p_count += in_normal_p_set(p); });
    benchmark::DoNotOptimize(p_count);
  }
}

static void BM_Verify(benchmark::State& state) {
  const Count bound = static_cast<Count>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorems(bound));
}

BENCHMARK(BM_SolveSerial)->ArgsProduct({{40, 60, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->ArgsProduct({{40, 60, 80}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifySweep)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verify)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
