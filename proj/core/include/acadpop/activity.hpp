#pragma once

#include "acadpop/corpus.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace acadpop {

struct ActivityRow {
  int year = 0;
  std::size_t active = 0;
  std::size_t alive = 0;
  std::optional<double> rate;  // active / alive, absent when alive == 0
};

/// Fraction of alive authors that publish in each year of the window.
std::vector<ActivityRow> activity_rate(const Corpus& corpus, const AlivePolicy& policy = AlivePolicy::windowed());

/// Activity among authors strictly inside their career (arrival < y < last
/// year). First and last years are active by construction, so excluding them
/// leaves an unbiased per-year estimate of the activity probability.
std::vector<ActivityRow> interior_activity_rate(const Corpus& corpus);

struct CapEstimate {
  std::optional<double> value;
  std::size_t numerator = 0;
  std::size_t support = 0;
};

/// Probability of being active at t + N given activity in every year of
/// [t, t + N - 1] and some paper in a year >= t + N.
/// Throws std::invalid_argument when N < 1 or [t, t + N] leaves the window.
CapEstimate cap_n(const Corpus& corpus, int t, int n);

struct CapCell {
  int t = 0;
  int n = 0;
  CapEstimate estimate;
};

/// CAP_N for every t in the window and N = 1 .. max_n where defined.
std::vector<CapCell> cap_grid(const Corpus& corpus, int max_n);

}  // namespace acadpop
