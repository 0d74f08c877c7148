#include "acadpop/reproduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace acadpop {

Credit OffspringLedger::credit_of(AuthorIndex senior) const {
  auto it = senior_credit.find(senior);
  return it == senior_credit.end() ? Credit(0) : it->second;
}

Credit OffspringLedger::total() const {
  Credit sum = 0;
  for (const auto& [_, c] : senior_credit) sum += c;
  return sum;
}

OffspringLedger assign_fractional_offspring(const Corpus& corpus, int year, CreditMode mode) {
  OffspringLedger ledger;
  ledger.year = year;
  for (auto n : corpus.newcomers_in(year)) ledger.newcomer_distributed.emplace(n, 0);
  if (ledger.newcomer_distributed.empty()) return ledger;

  // Renormalisation needs each newcomer's count of senior-bearing papers.
  std::map<AuthorIndex, int> senior_papers;
  if (mode == CreditMode::Renormalize) {
    for (auto p : corpus.papers_in(year)) {
      const auto authors = corpus.paper(p).authors;
      const bool has_senior = std::any_of(authors.begin(), authors.end(),
                                          [&](AuthorIndex a) { return corpus.author(a).arrival_year < year; });
      if (!has_senior) continue;
      for (auto a : authors) {
        if (corpus.author(a).arrival_year == year) ++senior_papers[a];
      }
    }
  }

  std::vector<AuthorIndex> seniors;
  for (auto p : corpus.papers_in(year)) {
    const auto authors = corpus.paper(p).authors;
    seniors.clear();
    for (auto a : authors) {
      if (corpus.author(a).arrival_year < year) seniors.push_back(a);
    }
    if (seniors.empty()) continue;
    for (auto n : authors) {
      const auto& rec = corpus.author(n);
      if (rec.arrival_year != year) continue;
      const int papers = mode == CreditMode::Renormalize ? senior_papers[n] : rec.papers_in(year);
      const Credit share(1, static_cast<long long>(papers) * static_cast<long long>(seniors.size()));
      for (auto s : seniors) ledger.senior_credit[s] += share;
      ledger.newcomer_distributed[n] += share * static_cast<long long>(seniors.size());
    }
  }
  return ledger;
}

double OffspringDistribution::cdf(double k) const {
  std::size_t below = 0;
  for (const auto& x : samples) below += to_double(x) <= k;
  return samples.empty() ? 0.0 : static_cast<double>(below) / static_cast<double>(samples.size());
}

std::vector<CdfStep> OffspringDistribution::steps() const {
  std::vector<Credit> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  std::vector<CdfStep> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    out.push_back({to_double(sorted[i]), static_cast<double>(i + 1) / static_cast<double>(sorted.size())});
  }
  return out;
}

std::optional<OffspringDistribution> offspring_distribution(const Corpus& corpus, const OffspringLedger& ledger,
                                                            int s, const ReproductionOptions& options) {
  const int t = ledger.year;
  if (s >= t) {
    throw std::invalid_argument("offspring_distribution: need s < t, got s=" + std::to_string(s) +
                                " t=" + std::to_string(t));
  }
  OffspringDistribution dist;
  dist.s = s;
  dist.t = t;
  std::size_t zeros = 0;
  for (auto a : corpus.active_in(t)) {
    const auto& rec = corpus.author(a);
    if (rec.arrival_year != s || !rec.alive_in(t, options.alive)) continue;
    auto k = ledger.credit_of(a);
    zeros += k == 0;
    dist.mu_exact += k;
    dist.samples.push_back(std::move(k));
  }
  if (dist.samples.empty()) return std::nullopt;
  const auto n = static_cast<long long>(dist.samples.size());
  dist.mu_exact /= n;
  dist.mu = to_double(dist.mu_exact);
  dist.p_zero = static_cast<double>(zeros) / static_cast<double>(n);
  return dist;
}

std::optional<OffspringDistribution> offspring_distribution(const Corpus& corpus, int s, int t,
                                                            const ReproductionOptions& options) {
  if (s >= t) {
    throw std::invalid_argument("offspring_distribution: need s < t, got s=" + std::to_string(s) +
                                " t=" + std::to_string(t));
  }
  return offspring_distribution(corpus, assign_fractional_offspring(corpus, t, options.credit), s, options);
}

std::vector<SurfaceCell> p_zero_surface(const Corpus& corpus, const ReproductionOptions& options) {
  std::vector<SurfaceCell> cells;
  const auto& w = corpus.window();
  for (int t = w.start + 1; t <= w.end; ++t) {
    const auto ledger = assign_fractional_offspring(corpus, t, options.credit);
    std::map<int, SurfaceCell> by_cohort;
    for (auto a : corpus.active_in(t)) {
      const auto& rec = corpus.author(a);
      if (rec.arrival_year >= t || !rec.alive_in(t, options.alive)) continue;
      auto& cell = by_cohort[rec.arrival_year];
      ++cell.support;
      auto it = ledger.senior_credit.find(a);
      if (it == ledger.senior_credit.end()) {
        ++cell.zeros;
      } else {
        cell.credit += it->second;
      }
    }
    for (auto& [s, cell] : by_cohort) {
      cell.s = s;
      cell.t = t;
      const auto n = static_cast<double>(cell.support);
      cell.p_zero = static_cast<double>(cell.zeros) / n;
      cell.mu = to_double(cell.credit / static_cast<long long>(cell.support));
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace acadpop
