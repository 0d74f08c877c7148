#pragma once

#include "acadpop/simulator.hpp"

namespace acadpop::bench {

/// A synthetic corpus of roughly `immigration * horizon * 8` authors.
inline Corpus synthetic_corpus(int horizon, double immigration, std::uint64_t seed = 1) {
  SimulationConfig c;
  c.horizon = horizon;
  c.immigration = immigration;
  c.lifetime = {0.5095, 0.9577};
  c.activity = 0.5;
  c.offspring.mu = 0.56;
  c.offspring.p_zero = CellGrid(0.6);
  c.seed = seed;
  return std::move(*stochastic_simulate(c).corpus);
}

}  // namespace acadpop::bench
