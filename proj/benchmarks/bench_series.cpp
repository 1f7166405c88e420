#include <qsv/series.hpp>

#include <benchmark/benchmark.h>

using namespace qsv;

namespace {

QSeries dense(const ContextPtr& ctx) {
  QSeries a = QSeries::symbol(ctx, "a");
  return invert(pochhammer_infinite(a * QSeries::q_power(ctx, 1)) * (QSeries::one(ctx) - a));
}

}  // namespace

static void BM_MultiplyTwoSymbols(benchmark::State& state) {
  auto ctx = make_context(ParamSet::canonical({"a", "b"}), static_cast<int>(state.range(0)), 12);
  QSeries f = dense(ctx);
  QSeries g = substitute(f, {}) + QSeries::symbol(ctx, "b");
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_MultiplyTwoSymbols)->Arg(10)->Arg(20)->Arg(30);

static void BM_InvertOneSymbol(benchmark::State& state) {
  auto ctx = make_context(ParamSet::canonical({"a"}), static_cast<int>(state.range(0)), 12);
  QSeries f = pochhammer_infinite(QSeries::symbol(ctx, "a") * QSeries::q_power(ctx, 1));
  for (auto _ : state) benchmark::DoNotOptimize(invert(f));
}
BENCHMARK(BM_InvertOneSymbol)->Arg(10)->Arg(30)->Arg(60);

static void BM_DivideOneMinus(benchmark::State& state) {
  auto ctx = make_context(ParamSet::canonical({"a"}), 30, 12);
  QSeries f = dense(ctx);
  QSeries a = QSeries::symbol(ctx, "a");
  for (auto _ : state) benchmark::DoNotOptimize(divide_one_minus(f, a, 1));
}
BENCHMARK(BM_DivideOneMinus);

static void BM_EulerProductNoSymbols(benchmark::State& state) {
  auto ctx = make_context(ParamSet{}, static_cast<int>(state.range(0)), 0);
  QSeries q = QSeries::q_power(ctx, 1);
  for (auto _ : state) benchmark::DoNotOptimize(invert(pochhammer_infinite(q)));
}
BENCHMARK(BM_EulerProductNoSymbols)->Arg(100)->Arg(400);

static void BM_KluyverLambertSeries(benchmark::State& state) {
  auto ctx = make_context(ParamSet{}, static_cast<int>(state.range(0)), 0);
  for (auto _ : state) {
    QSeries s = sum_family(
        ctx, 1, [&](int n) { return divide_one_minus(QSeries::q_power(ctx, n), QSeries::one(ctx), n); },
        [](int n) { return n; }, [](int) { return 0; });
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_KluyverLambertSeries)->Arg(50)->Arg(200);

BENCHMARK_MAIN();
