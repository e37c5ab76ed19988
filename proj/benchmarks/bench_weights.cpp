#include <cliffalg/plethysm.hpp>

#include <benchmark/benchmark.h>

using namespace cliffalg;

static void BM_IrrepWeightsF4ShortRho(benchmark::State& state) {
  const RootSystemData F4(RootType::F4, 4);
  // omega3 + omega4, the 4096-dimensional constituent.
  const Weight lambda = F4.fundamental_weights()[2] + F4.fundamental_weights()[3];
  for (auto _ : state) benchmark::DoNotOptimize(irrep_weights(F4, lambda));
}
BENCHMARK(BM_IrrepWeightsF4ShortRho)->Unit(benchmark::kMillisecond);

static void BM_HalfspinD13(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(halfspin_weights(13, +1));
}
BENCHMARK(BM_HalfspinD13)->Unit(benchmark::kMillisecond);

static void BM_VerifyPlethysm(benchmark::State& state) {
  const auto which = static_cast<PlethysmCase>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_plethysm(which));
}
BENCHMARK(BM_VerifyPlethysm)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
