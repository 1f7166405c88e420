#include <qsv/catalog.hpp>

#include <benchmark/benchmark.h>

using namespace qsv;

static void BM_Verify(benchmark::State& state, const char* id) {
  VerificationConfig c;
  c.order = static_cast<int>(state.range(0));
  c.max_degree = 12;
  for (auto _ : state) {
    VerificationReport r = verify(id, c);
    if (r.status != VerificationStatus::pass) state.SkipWithError("verification failed");
  }
}
BENCHMARK_CAPTURE(BM_Verify, main_theorem, "main-theorem")->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, dixit_maji_2, "dixit-maji-2")->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, van_hamme, "van-hamme")->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, diff_z, "diff-z")->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_VerifyAll(benchmark::State& state) {
  VerificationConfig c;
  c.order = static_cast<int>(state.range(0));
  c.max_degree = static_cast<int>(state.range(1));
  c.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(c));
}
BENCHMARK(BM_VerifyAll)->Args({10, 6})->Args({30, 12})->Unit(benchmark::kSecond)->Iterations(1);

static void BM_Specializations(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_specializations(25, 12));
}
BENCHMARK(BM_Specializations)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
