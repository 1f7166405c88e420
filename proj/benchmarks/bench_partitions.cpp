#include <qsv/partitions.hpp>
#include <qsv/weights.hpp>

#include <benchmark/benchmark.h>

using namespace qsv;

static void BM_EnumerateDistinct(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(count_partitions(static_cast<int>(state.range(0)), PartitionClass::distinct));
}
BENCHMARK(BM_EnumerateDistinct)->Arg(20)->Arg(40)->Arg(60);

static void BM_EnumerateAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_partitions(static_cast<int>(state.range(0)), PartitionClass::all));
}
BENCHMARK(BM_EnumerateAll)->Arg(20)->Arg(30);

static void BM_EnumerateOverpartitions(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(count_partitions(static_cast<int>(state.range(0)), PartitionClass::overpartitions));
}
BENCHMARK(BM_EnumerateOverpartitions)->Arg(15)->Arg(25);

static void BM_BressoudSubbaraoWeightedSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bs_weighted_sum(static_cast<int>(state.range(0)), 2, Rational(3, 5)));
}
BENCHMARK(BM_BressoudSubbaraoWeightedSum)->Arg(20)->Arg(40);

static void BM_RankCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rank_count(1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RankCount)->Arg(20)->Arg(30);

BENCHMARK_MAIN();
