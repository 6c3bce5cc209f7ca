// Serial references against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "xichar/jack.hpp"
#include "xichar/maporacle.hpp"

using namespace xichar;

static void BM_JackWeightSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jack_weight_serial(static_cast<int>(state.range(0))));
}
static void BM_JackWeightParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jack_weight_parallel(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_JackWeightSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JackWeightParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

// Jack records are cached, so these time the assembly of the sum.
static void BM_PartitionSumSerial(benchmark::State& state) {
  jacks_of_weight(6);
  for (auto _ : state) benchmark::DoNotOptimize(jack_partition_sum_serial(3));
}
static void BM_PartitionSumParallel(benchmark::State& state) {
  jacks_of_weight(6);
  for (auto _ : state) benchmark::DoNotOptimize(jack_partition_sum(3));
}
BENCHMARK(BM_PartitionSumSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartitionSumParallel)->Unit(benchmark::kMillisecond);

static void BM_OrientableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rooted_orientable_counts_serial(static_cast<int>(state.range(0)), 4));
}
static void BM_OrientableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rooted_orientable_counts(static_cast<int>(state.range(0)), 4));
}
BENCHMARK(BM_OrientableSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrientableParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_LocallyOrientableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rooted_locally_orientable_counts_serial(3));
}
static void BM_LocallyOrientableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rooted_locally_orientable_counts(3));
}
BENCHMARK(BM_LocallyOrientableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocallyOrientableParallel)->Unit(benchmark::kMillisecond);

static void BM_GlueSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(glue_census_serial({4, 4, 2}));
}
static void BM_GlueParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(glue_census({4, 4, 2}));
}
BENCHMARK(BM_GlueSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GlueParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
