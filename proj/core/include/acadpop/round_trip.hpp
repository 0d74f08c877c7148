#pragma once

#include "acadpop/lifecycle.hpp"
#include "acadpop/simulator.hpp"

#include <json.hpp>

#include <cstddef>
#include <vector>

namespace acadpop {

struct RoundTripOptions {
  FitOptions fit;               // cohort horizon and censor guard for the lifetime fit
  int boundary = 5;             // years trimmed at each window edge for activity
  double min_expected_authors = 1e4;
};

struct ActivityRecovery {
  int year = 0;
  double truth = 0;
  double estimate = 0;
  std::size_t support = 0;
};

/// Parameters recovered by analysing a synthetic corpus.
struct RoundTripReport {
  LifetimeModel truth;
  LifetimeFit fit;
  double alpha_error = 0;  // estimate - truth
  double beta_error = 0;

  std::vector<ActivityRecovery> activity;  // non-boundary years only
  double theta_max_abs_error = 0;

  double mu_truth = 0;     // support-weighted mean of the configured mu(s, t)
  double mu_estimate = 0;  // pooled fractional-offspring mean over all (s, t) cells
  double mu_standard_error = 0;
  std::size_t mu_support = 0;

  double expected_authors = 0;
  std::size_t authors = 0;
  std::size_t papers = 0;

  double mu_error() const noexcept { return mu_estimate - mu_truth; }
  nlohmann::json to_json() const;
};

/// Simulates, analyses the synthetic corpus and compares recovered parameters
/// with the configuration. Requires a seed and at least
/// min_expected_authors expected authors.
RoundTripReport round_trip(const SimulationConfig& config, const RoundTripOptions& options = {});

}  // namespace acadpop
