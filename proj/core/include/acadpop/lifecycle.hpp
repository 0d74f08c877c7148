#pragma once

#include "acadpop/corpus.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace acadpop {

/// Two-parameter academic lifetime law:
///   q(1) = alpha,  q(l) = (1 - alpha) beta^(l-2) (1 - beta) for l >= 2.
struct LifetimeModel {
  double alpha = 0.5;
  double beta = 0.95;

  /// Throws ConfigError unless 0 <= alpha <= 1 and 0 <= beta < 1.
  void validate() const;

  /// Probability mass of lifetime l (0 for l < 1).
  double pmf(int l) const noexcept;
  /// P(lifetime > l); equals 1 - sum_{j<=l} pmf(j).
  double survival(int l) const noexcept;
  /// Expected lifetime given survival past the first year: 2 + beta / (1 - beta).
  double conditional_mean() const noexcept;
  /// Unconditional expected lifetime.
  double mean() const noexcept;

  friend bool operator==(const LifetimeModel&, const LifetimeModel&) = default;
};

/// Lifetime in years, counting both the arrival and the last year.
inline int lifetime(const AuthorRecord& rec) noexcept { return rec.last_year - rec.arrival_year + 1; }

/// True when the last publication falls within `guard` years of the window end,
/// i.e. the observed lifetime may be cut short by the end of the data.
inline bool is_censored(const AuthorRecord& rec, const YearWindow& w, int guard) noexcept {
  return rec.last_year > w.end - guard;
}

struct ImrEntry {
  double value = 0;
  std::size_t newcomers = 0;
  std::size_t infant = 0;
  bool censored = false;  // arrival year inside the censor guard
};

std::map<int, ImrEntry> imr_by_year(const Corpus& corpus, int censor_guard = 5);

/// A ratio with its conditioning-set size.
struct Estimate {
  double value = 0;
  std::size_t support = 0;
};

/// Fraction of the authors alive at academic age `age` in `year` who continue
/// past it. nullopt when nobody is alive at that age.
/// Throws std::invalid_argument when age < 1, the cohort falls outside the
/// window, or year lies inside the censor guard.
std::optional<Estimate> retention(const Corpus& corpus, int year, int age, int censor_guard = 5);

struct RetentionCell {
  int year = 0;
  int age = 0;
  Estimate estimate;
};

/// All defined (year, age) cells with year <= window end - censor_guard.
std::vector<RetentionCell> retention_grid(const Corpus& corpus, int censor_guard = 5);

/// Entry j-1 is the fraction of the cohort with lifetime >= j, for
/// j = 1 .. window_end - cohort_year + 1. Throws std::invalid_argument when the
/// cohort is empty.
std::vector<double> lifetime_ccdf(const Corpus& corpus, int cohort_year);

/// A lifetime observation. When `censored` is set the author was still alive
/// after `lifetime` years when observation stopped (true lifetime > lifetime).
struct LifetimeSample {
  int lifetime = 1;
  bool censored = false;
};

struct LifetimeFit {
  LifetimeModel model;
  std::size_t samples = 0;       // authors used
  std::size_t tail_events = 0;   // uncensored lifetimes >= 2
  std::size_t censored = 0;
  double tail_exposure = 0;      // sum of (l - 2) over events plus (c - 1) over censored
  std::vector<int> cohorts;
};

struct FitOptions {
  int cohort_horizon = 20;       // use cohorts with arrival <= window end - horizon
  int censor_guard = 5;          // authors active after window end - guard are right-censored
  std::size_t min_tail_samples = 1;
};

/// Maximum-likelihood fit of (alpha, beta).
///
/// alpha is the share of lifetime-1 observations. beta maximises
///   S log(beta) + n log(1 - beta)
/// with n uncensored lifetimes >= 2 and S their total (l - 2) plus the
/// survived tail years (c - 1) of censored lifetimes, giving beta = S / (S + n).
/// Without censoring this is m / (1 + m) with m the mean of (l - 2).
/// Throws std::invalid_argument with fewer than min_tail_samples events.
LifetimeFit fit_lifetime_samples(std::span<const LifetimeSample> samples, std::size_t min_tail_samples = 1);

/// Builds samples from the corpus (cohort filter plus right-censoring) and fits.
LifetimeFit fit_lifetime_model(const Corpus& corpus, const FitOptions& options = {});

/// The samples fit_lifetime_model uses.
std::vector<LifetimeSample> lifetime_samples(const Corpus& corpus, const FitOptions& options,
                                             std::vector<int>* cohorts = nullptr);

}  // namespace acadpop
