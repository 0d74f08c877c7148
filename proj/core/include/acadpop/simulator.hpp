#pragma once

#include "acadpop/corpus.hpp"
#include "acadpop/lifecycle.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace acadpop {

/// A per-step quantity: either a constant or one value per step 1..T.
class YearSeries {
 public:
  YearSeries() = default;
  YearSeries(double constant) : constant_(constant) {}  // NOLINT: implicit from a constant
  explicit YearSeries(std::vector<double> values) : values_(std::move(values)) {}

  /// Value at step t (1-based). Per-step series clamp to their last value.
  double at(int t) const;
  bool is_constant() const noexcept { return values_.empty(); }
  const std::vector<double>& values() const noexcept { return values_; }
  double constant() const noexcept { return constant_; }

 private:
  double constant_ = 0;
  std::vector<double> values_;
};

/// A quantity indexed by (arrival step s, current step t) with a default.
class CellGrid {
 public:
  CellGrid() = default;
  CellGrid(double fallback) : fallback_(fallback) {}  // NOLINT: implicit from a constant

  double at(int s, int t) const;
  void set(int s, int t, double value) { cells_[{s, t}] = value; }
  double fallback() const noexcept { return fallback_; }
  const std::map<std::pair<int, int>, double>& cells() const noexcept { return cells_; }

 private:
  double fallback_ = 0;
  std::map<std::pair<int, int>, double> cells_;
};

struct OffspringConfig {
  CellGrid mu = 0.5;
  /// Atom at zero for the stochastic sampler; defaults to max(0, 1 - mu),
  /// which makes the offspring count Bernoulli(mu) when mu <= 1.
  std::optional<CellGrid> p_zero;

  double p_zero_at(int s, int t) const;
};

struct SimulationConfig {
  int horizon = 50;
  int start_year = 1960;  // calendar year of step 1 in the synthetic corpus
  YearSeries immigration = 100.0;
  LifetimeModel lifetime;
  YearSeries activity = 1.0;
  OffspringConfig offspring;
  double papers_per_active_year = 1.0;
  std::optional<std::uint64_t> seed;

  /// Throws ConfigError naming the offending field.
  void validate() const;

  static SimulationConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

template <typename T>
struct TrajectoryRow {
  int t = 0;
  T alive{};        // N(t)
  T births{};       // B(t) = I(t) + M(t)
  T deaths{};       // D(t)
  T immigrants{};   // I(t)
  T mainstream{};   // M(t)
};

using ExpectedTrajectory = std::vector<TrajectoryRow<double>>;
using StochasticTrajectory = std::vector<TrajectoryRow<std::int64_t>>;

/// Deterministic expectation recursion:
///   M(t) = sum_{s<t} B(s) P(L > t - s) theta(t) mu(s, t)
///   D(t) = sum_{s<t} B(s) q(t - s)
///   B(t) = I(t) + M(t),  N(t) = N(t - 1) + B(t) - D(t),  N(0) = 0.
ExpectedTrajectory expected_trajectory(const SimulationConfig& config);

/// Draws a lifetime from the model.
template <typename Rng>
int sample_lifetime(Rng& rng, const LifetimeModel& model) {
  if (std::bernoulli_distribution(model.alpha)(rng)) return 1;
  if (model.beta <= 0.0) return 2;
  return 2 + std::geometric_distribution<int>(1.0 - model.beta)(rng);
}

/// Zero-inflated shifted Poisson: 0 with probability p0, else
/// 1 + Poisson(mu / (1 - p0) - 1). Its mean is mu.
class OffspringSampler {
 public:
  OffspringSampler(double p_zero, double mu);

  template <typename Rng>
  int operator()(Rng& rng) const {
    if (p_zero_ >= 1.0 || std::bernoulli_distribution(p_zero_)(rng)) return 0;
    if (extra_ <= 0.0) return 1;
    return 1 + std::poisson_distribution<int>(extra_)(rng);
  }

  /// Throws ConfigError unless 0 <= p0 <= 1, mu >= 0 and mu / (1 - p0) >= 1 when p0 < 1.
  static void check(double p_zero, double mu);

 private:
  double p_zero_;
  double extra_;
};

struct SimulationOptions {
  bool build_corpus = true;
};

struct SimulationResult {
  StochasticTrajectory trajectory;
  std::optional<Corpus> corpus;
  std::size_t authors = 0;
};

/// Sample-path realisation of the process with a synthetic publication record.
///
/// Each author draws a lifetime at birth. In every later year of life an
/// author is active with probability theta(t); the last year of life is always
/// active, as is the arrival year. Active seniors draw offspring counts from
/// OffspringSampler; each offspring arrives as a newcomer whose first-year
/// papers all list the parent. Immigrant counts are Poisson(I(t)) and their
/// first papers are single-authored. Every active author-year yields
/// 1 + Poisson(lambda - 1) papers. Requires config.seed.
SimulationResult stochastic_simulate(const SimulationConfig& config, const SimulationOptions& options = {});

}  // namespace acadpop
