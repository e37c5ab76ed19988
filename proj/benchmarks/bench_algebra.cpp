#include <cliffalg/degeneration.hpp>
#include <cliffalg/lie_structure.hpp>
#include <cliffalg/local_models.hpp>
#include <cliffalg/random.hpp>

#include <benchmark/benchmark.h>

using namespace cliffalg;

static void BM_GeometricProduct(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(1);
  const SpaceQ V = random_space(rng, m);
  const auto x = random_multivector(rng, m, 16), y = random_multivector(rng, m, 16);
  for (auto _ : state) benchmark::DoNotOptimize(geometric_product(x, y, V));
}
BENCHMARK(BM_GeometricProduct)->Arg(4)->Arg(8)->Arg(12);

static void BM_GeometricProductDiagonal(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(1);
  const SpaceQ V = SpaceQ::identity(m);
  const auto x = random_multivector(rng, m, 16), y = random_multivector(rng, m, 16);
  for (auto _ : state) benchmark::DoNotOptimize(geometric_product(x, y, V));
}
BENCHMARK(BM_GeometricProductDiagonal)->Arg(8)->Arg(12);

static void BM_ReconstructForm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  Rng rng(2);
  const SpaceQ V = random_space(rng, m);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_form(structure_constants(V)));
}
BENCHMARK(BM_ReconstructForm)->Arg(5)->Arg(9);

static void BM_CertifySpecialization(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  std::vector<Polynomial> d(m, Polynomial(1));
  d.back() = Polynomial::t();
  const auto F = QuadraticSpace<Polynomial>::diagonal(d);
  for (auto _ : state) benchmark::DoNotOptimize(certify_specialization(F));
}
BENCHMARK(BM_CertifySpecialization)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_TraceFingerprint(benchmark::State& state) {
  Rng rng(3);
  std::vector<MatrixQ> X;
  for (int k = 0; k < 2; ++k) X.push_back(random_invertible(rng, 3));
  const MatrixTuple T(3, X);
  for (auto _ : state) benchmark::DoNotOptimize(trace_fingerprint(T, 9));
}
BENCHMARK(BM_TraceFingerprint)->Unit(benchmark::kMillisecond);
