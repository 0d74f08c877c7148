#include "acadpop/lifecycle.hpp"

#include "acadpop/error.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace acadpop {

void LifetimeModel::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ConfigError("lifetime.alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  if (!(beta >= 0.0 && beta < 1.0)) {
    throw ConfigError("lifetime.beta must lie in [0, 1), got " + std::to_string(beta));
  }
}

double LifetimeModel::pmf(int l) const noexcept {
  if (l < 1) return 0.0;
  if (l == 1) return alpha;
  return (1.0 - alpha) * std::pow(beta, l - 2) * (1.0 - beta);
}

double LifetimeModel::survival(int l) const noexcept {
  if (l < 1) return 1.0;
  return (1.0 - alpha) * std::pow(beta, l - 1);
}

double LifetimeModel::conditional_mean() const noexcept { return 2.0 + beta / (1.0 - beta); }

double LifetimeModel::mean() const noexcept { return alpha + (1.0 - alpha) * conditional_mean(); }

std::map<int, ImrEntry> imr_by_year(const Corpus& corpus, int censor_guard) {
  std::map<int, ImrEntry> out;
  const auto& w = corpus.window();
  for (int y = w.start; y <= w.end; ++y) {
    const auto cohort = corpus.newcomers_in(y);
    if (cohort.empty()) continue;
    ImrEntry e;
    e.newcomers = cohort.size();
    for (auto a : cohort) e.infant += lifetime(corpus.author(a)) == 1;
    e.value = static_cast<double>(e.infant) / static_cast<double>(e.newcomers);
    e.censored = y > w.end - censor_guard;
    out.emplace(y, e);
  }
  return out;
}

std::optional<Estimate> retention(const Corpus& corpus, int year, int age, int censor_guard) {
  const auto& w = corpus.window();
  if (age < 1) throw std::invalid_argument("retention: age must be >= 1");
  const int cohort = year - age + 1;
  if (!w.contains(cohort) || !w.contains(year)) {
    throw std::invalid_argument("retention: cohort year " + std::to_string(cohort) + " outside the window");
  }
  if (year > w.end - censor_guard) {
    throw std::invalid_argument("retention: year " + std::to_string(year) + " inside the censor guard");
  }
  Estimate e;
  std::size_t stayed = 0;
  for (auto a : corpus.newcomers_in(cohort)) {
    const int l = lifetime(corpus.author(a));
    if (l < age) continue;
    ++e.support;
    stayed += l >= age + 1;
  }
  if (e.support == 0) return std::nullopt;
  e.value = static_cast<double>(stayed) / static_cast<double>(e.support);
  return e;
}

std::vector<RetentionCell> retention_grid(const Corpus& corpus, int censor_guard) {
  std::vector<RetentionCell> cells;
  const auto& w = corpus.window();
  for (int y = w.start; y <= w.end - censor_guard; ++y) {
    for (int age = 1; age <= y - w.start + 1; ++age) {
      if (auto e = retention(corpus, y, age, censor_guard)) cells.push_back({y, age, *e});
    }
  }
  return cells;
}

std::vector<double> lifetime_ccdf(const Corpus& corpus, int cohort_year) {
  const auto cohort = corpus.newcomers_in(cohort_year);
  if (cohort.empty()) {
    throw std::invalid_argument("lifetime_ccdf: no newcomers in " + std::to_string(cohort_year));
  }
  const int span = corpus.window().end - cohort_year + 1;
  std::vector<std::size_t> at_least(static_cast<std::size_t>(span) + 1, 0);
  for (auto a : cohort) ++at_least[static_cast<std::size_t>(lifetime(corpus.author(a)))];
  // Suffix sums turn "lifetime == l" counts into "lifetime >= l".
  for (int l = span - 1; l >= 1; --l) at_least[static_cast<std::size_t>(l)] += at_least[static_cast<std::size_t>(l) + 1];

  std::vector<double> ccdf(static_cast<std::size_t>(span));
  for (int j = 1; j <= span; ++j) {
    ccdf[static_cast<std::size_t>(j - 1)] =
        static_cast<double>(at_least[static_cast<std::size_t>(j)]) / static_cast<double>(cohort.size());
  }
  return ccdf;
}

LifetimeFit fit_lifetime_samples(std::span<const LifetimeSample> samples, std::size_t min_tail_samples) {
  LifetimeFit fit;
  std::size_t infant = 0;
  for (const auto& s : samples) {
    if (s.lifetime < 1) throw std::invalid_argument("lifetime samples must be >= 1");
    ++fit.samples;
    if (s.censored) {
      ++fit.censored;
      fit.tail_exposure += s.lifetime - 1;
    } else if (s.lifetime == 1) {
      ++infant;
    } else {
      ++fit.tail_events;
      fit.tail_exposure += s.lifetime - 2;
    }
  }
  if (fit.tail_events < std::max<std::size_t>(min_tail_samples, 1)) {
    throw std::invalid_argument("lifetime fit needs at least " + std::to_string(std::max<std::size_t>(min_tail_samples, 1)) +
                                " uncensored lifetimes >= 2, got " + std::to_string(fit.tail_events));
  }
  fit.model.alpha = static_cast<double>(infant) / static_cast<double>(fit.samples);
  fit.model.beta = fit.tail_exposure / (fit.tail_exposure + static_cast<double>(fit.tail_events));
  return fit;
}

std::vector<LifetimeSample> lifetime_samples(const Corpus& corpus, const FitOptions& options,
                                             std::vector<int>* cohorts) {
  const auto& w = corpus.window();
  const int last_cohort = w.end - options.cohort_horizon;
  const int cutoff = w.end - options.censor_guard;
  if (options.cohort_horizon < options.censor_guard) {
    throw std::invalid_argument("fit: cohort horizon must not be shorter than the censor guard");
  }
  std::vector<LifetimeSample> samples;
  for (int s = w.start; s <= last_cohort; ++s) {
    const auto cohort = corpus.newcomers_in(s);
    if (cohort.empty()) continue;
    if (cohorts) cohorts->push_back(s);
    for (auto a : cohort) {
      const auto& rec = corpus.author(a);
      if (s <= cutoff && rec.last_year > cutoff) {
        samples.push_back({cutoff - s + 1, true});
      } else {
        samples.push_back({lifetime(rec), false});
      }
    }
  }
  return samples;
}

LifetimeFit fit_lifetime_model(const Corpus& corpus, const FitOptions& options) {
  std::vector<int> cohorts;
  const auto samples = lifetime_samples(corpus, options, &cohorts);
  auto fit = fit_lifetime_samples(samples, options.min_tail_samples);
  fit.cohorts = std::move(cohorts);
  return fit;
}

}  // namespace acadpop
