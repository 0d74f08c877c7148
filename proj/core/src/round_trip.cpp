#include "acadpop/round_trip.hpp"

#include "acadpop/activity.hpp"
#include "acadpop/error.hpp"
#include "acadpop/reproduction.hpp"

#include <cmath>
#include <numeric>

namespace acadpop {

RoundTripReport round_trip(const SimulationConfig& config, const RoundTripOptions& options) {
  config.validate();
  if (!config.seed) throw ConfigError("round trip requires a seed");

  RoundTripReport report;
  report.truth = config.lifetime;
  for (const auto& row : expected_trajectory(config)) report.expected_authors += row.births;
  if (report.expected_authors < options.min_expected_authors) {
    throw ConfigError("round trip needs >= " + std::to_string(options.min_expected_authors) +
                      " expected authors, config yields " + std::to_string(report.expected_authors));
  }

  const auto sim = stochastic_simulate(config);
  const Corpus& corpus = *sim.corpus;
  report.authors = corpus.author_count();
  report.papers = corpus.paper_count();

  report.fit = fit_lifetime_model(corpus, options.fit);
  report.alpha_error = report.fit.model.alpha - config.lifetime.alpha;
  report.beta_error = report.fit.model.beta - config.lifetime.beta;

  const auto& w = corpus.window();
  for (const auto& row : interior_activity_rate(corpus)) {
    if (row.year < w.start + options.boundary || row.year > w.end - options.boundary || !row.rate) continue;
    const int step = row.year - config.start_year + 1;
    ActivityRecovery r{row.year, config.activity.at(step), *row.rate, row.alive};
    report.theta_max_abs_error = std::max(report.theta_max_abs_error, std::abs(r.estimate - r.truth));
    report.activity.push_back(r);
  }

  // Pooled offspring mean over every conditioned senior-year.
  double sum = 0, sum_sq = 0, truth = 0;
  std::size_t n = 0;
  for (int t = w.start + 1; t <= w.end; ++t) {
    const auto ledger = assign_fractional_offspring(corpus, t);
    for (auto a : corpus.active_in(t)) {
      const auto& rec = corpus.author(a);
      if (rec.arrival_year >= t) continue;
      const double k = to_double(ledger.credit_of(a));
      sum += k;
      sum_sq += k * k;
      truth += config.offspring.mu.at(rec.arrival_year - config.start_year + 1, t - config.start_year + 1);
      ++n;
    }
  }
  if (n > 1) {
    const double mean = sum / static_cast<double>(n);
    const double var = (sum_sq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
    report.mu_estimate = mean;
    report.mu_truth = truth / static_cast<double>(n);
    report.mu_standard_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
  }
  report.mu_support = n;
  return report;
}

nlohmann::json RoundTripReport::to_json() const {
  nlohmann::json activity_rows = nlohmann::json::array();
  for (const auto& r : activity) {
    activity_rows.push_back({{"year", r.year}, {"truth", r.truth}, {"estimate", r.estimate}, {"support", r.support}});
  }
  return {
      {"lifetime",
       {{"alpha_truth", truth.alpha},
        {"alpha_estimate", fit.model.alpha},
        {"alpha_error", alpha_error},
        {"beta_truth", truth.beta},
        {"beta_estimate", fit.model.beta},
        {"beta_error", beta_error},
        {"samples", fit.samples},
        {"tail_events", fit.tail_events},
        {"censored", fit.censored},
        {"cohorts", fit.cohorts}}},
      {"activity", {{"max_abs_error", theta_max_abs_error}, {"years", activity_rows}}},
      {"offspring",
       {{"mu_truth", mu_truth},
        {"mu_estimate", mu_estimate},
        {"mu_error", mu_error()},
        {"standard_error", mu_standard_error},
        {"support", mu_support},
        {"note", "pooled over all (s, t) cells; |error| <= 3 standard errors expected"}}},
      {"population", {{"expected_authors", expected_authors}, {"authors", authors}, {"papers", papers}}},
  };
}

}  // namespace acadpop
