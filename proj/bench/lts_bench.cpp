#include <benchmark/benchmark.h>

#include "lts/catalog.hpp"
#include "lts/cohomology.hpp"
#include "lts/separating.hpp"

using namespace lts;

static void BM_AxiomsParallel(benchmark::State& state) {
  Lts T = instantiate("T4,7");
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(T));
}
BENCHMARK(BM_AxiomsParallel);

static void BM_AxiomsSerial(benchmark::State& state) {
  Lts T = instantiate("T4,7");
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms_serial(T));
}
BENCHMARK(BM_AxiomsSerial);

static void BM_CocycleRowsParallel(benchmark::State& state) {
  Lts T = instantiate("T4,8");
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_system_rows(T));
}
BENCHMARK(BM_CocycleRowsParallel);

static void BM_CocycleRowsSerial(benchmark::State& state) {
  Lts T = instantiate("T4,8");
  for (auto _ : state) benchmark::DoNotOptimize(cocycle_system_rows_serial(T));
}
BENCHMARK(BM_CocycleRowsSerial);

static void BM_BorelParallel(benchmark::State& state) {
  SeparatingSet R = separating_r1();
  for (auto _ : state) benchmark::DoNotOptimize(borel_stability(R, StabilityMode::Randomized, 50, 1));
}
BENCHMARK(BM_BorelParallel);

static void BM_BorelSerial(benchmark::State& state) {
  SeparatingSet R = separating_r1();
  for (auto _ : state) benchmark::DoNotOptimize(borel_stability_serial(R, 50, 1));
}
BENCHMARK(BM_BorelSerial);

static void BM_WitnessBatch(benchmark::State& state) {
  auto ws = known_degenerations();
  for (auto _ : state)
    for (const auto& w : ws) benchmark::DoNotOptimize(verify_degeneration(w));
}
BENCHMARK(BM_WitnessBatch);

BENCHMARK_MAIN();
