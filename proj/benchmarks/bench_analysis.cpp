#include "acadpop/activity.hpp"
#include "acadpop/arrival.hpp"
#include "acadpop/lifecycle.hpp"
#include "acadpop/productivity.hpp"
#include "acadpop/reproduction.hpp"

#include "bench_common.hpp"

#include <benchmark/benchmark.h>

namespace {

const acadpop::Corpus& corpus() {
  static const auto c = acadpop::bench::synthetic_corpus(30, 500);
  return c;
}

void BM_Stats(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(acadpop::stats(corpus(), acadpop::AlivePolicy::windowed()));
}
BENCHMARK(BM_Stats)->Unit(benchmark::kMillisecond);

void BM_ArrivalReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(acadpop::arrival_report(corpus()));
}
BENCHMARK(BM_ArrivalReport)->Unit(benchmark::kMillisecond);

void BM_LifetimeFit(benchmark::State& state) {
  acadpop::FitOptions opts;
  opts.cohort_horizon = 10;
  for (auto _ : state) benchmark::DoNotOptimize(acadpop::fit_lifetime_model(corpus(), opts).model.beta);
}
BENCHMARK(BM_LifetimeFit)->Unit(benchmark::kMillisecond);

void BM_RetentionGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(acadpop::retention_grid(corpus()));
}
BENCHMARK(BM_RetentionGrid)->Unit(benchmark::kMillisecond);

void BM_CapGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(acadpop::cap_grid(corpus(), 10));
}
BENCHMARK(BM_CapGrid)->Unit(benchmark::kMillisecond);

void BM_Productivity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(acadpop::productivity_report(corpus()));
}
BENCHMARK(BM_Productivity)->Unit(benchmark::kMillisecond);

void BM_OffspringSurface(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(acadpop::p_zero_surface(corpus()));
}
BENCHMARK(BM_OffspringSurface)->Unit(benchmark::kMillisecond);

}  // namespace
