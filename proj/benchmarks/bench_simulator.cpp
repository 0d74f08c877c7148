#include "acadpop/simulator.hpp"

#include <benchmark/benchmark.h>

namespace {

acadpop::SimulationConfig config(int horizon, double immigration) {
  acadpop::SimulationConfig c;
  c.horizon = horizon;
  c.immigration = immigration;
  c.lifetime = {0.5095, 0.9577};
  c.activity = 0.5;
  c.offspring.mu = 0.56;
  c.offspring.p_zero = acadpop::CellGrid(0.6);
  c.seed = 7;
  return c;
}

void BM_ExpectedTrajectory(benchmark::State& state) {
  const auto c = config(static_cast<int>(state.range(0)), 2000);
  for (auto _ : state) benchmark::DoNotOptimize(acadpop::expected_trajectory(c).back().alive);
}
BENCHMARK(BM_ExpectedTrajectory)->Arg(50)->Arg(200)->Arg(1000);

void BM_StochasticTrajectoryOnly(benchmark::State& state) {
  const auto c = config(40, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto r = acadpop::stochastic_simulate(c, {.build_corpus = false});
    benchmark::DoNotOptimize(r.authors);
  }
}
BENCHMARK(BM_StochasticTrajectoryOnly)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_StochasticWithCorpus(benchmark::State& state) {
  const auto c = config(40, static_cast<double>(state.range(0)));
  for (auto _ : state) {
    auto r = acadpop::stochastic_simulate(c);
    benchmark::DoNotOptimize(r.corpus->paper_count());
  }
}
BENCHMARK(BM_StochasticWithCorpus)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
