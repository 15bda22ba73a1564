#include <benchmark/benchmark.h>

#include "subfox/subfox.hpp"

namespace {

using namespace subfox;

void BM_LogGamma(benchmark::State& st) {
  Complex z(2.5, 3.7);
  for (auto _ : st) benchmark::DoNotOptimize(log_gamma(z));
}
BENCHMARK(BM_LogGamma);

void BM_StableDensity(benchmark::State& st) {
  const double beta = st.range(0) / 10.0;
  auto method = static_cast<DensityMethod>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(stable::density({beta, 1.0}, 1.3, method));
}
BENCHMARK(BM_StableDensity)
    ->ArgsProduct({{3, 7}, {static_cast<int>(DensityMethod::hfun), static_cast<int>(DensityMethod::mwright)}});

void BM_InverseDensity(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(inverse_stable::density({0.7, 1.0}, 1.3));
}
BENCHMARK(BM_InverseDensity);

void BM_Quadrature(benchmark::State& st) {
  HParams p = stable::hparams({0.7, 1.0});
  EvalOptions o;
  o.route = Route::quadrature;
  for (auto _ : st) benchmark::DoNotOptimize(evaluate(p, 1.3, o));
}
BENCHMARK(BM_Quadrature);

void BM_ResidueSeries(benchmark::State& st) {
  HParams p = stable::hparams({0.7, 1.0});
  for (auto _ : st) benchmark::DoNotOptimize(eval_residue_series(p, 3.0, Side::right));
}
BENCHMARK(BM_ResidueSeries);

void BM_Quotient(benchmark::State& st) {
  ComposedDensity q = quotient({Kind::stable, 0.5, 1.0}, {Kind::stable, 0.7, 1.0});
  for (auto _ : st) benchmark::DoNotOptimize(q(2.0));
}
BENCHMARK(BM_Quotient);

void BM_StableCdf(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(stable::cdf({0.6, 1.0}, 2.0));
}
BENCHMARK(BM_StableCdf);

}  // namespace

BENCHMARK_MAIN();
