#include "acadpop/arrival.hpp"

#include <algorithm>
#include <unordered_map>

namespace acadpop {

namespace {

struct PaperComposition {
  std::size_t seniors = 0;
  std::size_t newcomers = 0;
};

PaperComposition compose(const Corpus& corpus, PaperIndex p, int year) {
  PaperComposition c;
  for (auto a : corpus.paper(p).authors) {
    if (corpus.author(a).arrival_year < year) {
      ++c.seniors;
    } else {
      ++c.newcomers;
    }
  }
  return c;
}

std::optional<double> mean(double total, std::size_t n) {
  if (n == 0) return std::nullopt;
  return total / static_cast<double>(n);
}

}  // namespace

NewcomerClasses classify_newcomers(const Corpus& corpus, int year) {
  std::vector<char> has_senior(corpus.author_count(), 0);
  for (auto p : corpus.papers_in(year)) {
    if (compose(corpus, p, year).seniors == 0) continue;
    for (auto a : corpus.paper(p).authors) {
      if (corpus.author(a).arrival_year == year) has_senior[a] = 1;
    }
  }
  NewcomerClasses out;
  for (auto a : corpus.newcomers_in(year)) {
    (has_senior[a] ? out.mainstream : out.immigrants).push_back(a);
  }
  return out;
}

Motif classify_motif(std::size_t a, std::size_t b) noexcept {
  if (b == 0) {
    if (a == 0) return Motif::Solo;
    return a == 1 ? Motif::OneSenior : Motif::SeveralSeniors;
  }
  if (a == 0) return Motif::NewcomersOnly;
  return b > a ? Motif::MoreNewcomers : Motif::NoFewerSeniors;
}

std::string_view motif_label(Motif m) noexcept {
  constexpr std::array<std::string_view, kMotifCount> labels = {"i", "ii", "iii", "iv", "v", "vi"};
  return labels[static_cast<std::size_t>(m)];
}

std::optional<double> MotifCensus::fraction(Motif m) const noexcept {
  if (newcomer_papers == 0) return std::nullopt;
  return static_cast<double>((*this)[m]) / static_cast<double>(newcomer_papers);
}

MotifCensus motif_census(const Corpus& corpus, int year) {
  MotifCensus census;
  for (auto p : corpus.papers_in(year)) {
    const auto c = compose(corpus, p, year);
    if (c.newcomers == 0) continue;
    ++census.counts[static_cast<std::size_t>(classify_motif(c.seniors, c.newcomers - 1))];
    ++census.newcomer_papers;
  }
  return census;
}

CoauthorStats coauthor_stats(const Corpus& corpus, int year, CoauthorCounting counting) {
  // Per active author: coauthor count and newcomer-coauthor count for the year.
  std::unordered_map<AuthorIndex, std::vector<AuthorIndex>> partners;
  std::unordered_map<AuthorIndex, std::size_t> summed;
  std::unordered_map<AuthorIndex, std::size_t> summed_newcomers;

  for (auto p : corpus.papers_in(year)) {
    const auto authors = corpus.paper(p).authors;
    std::size_t newcomers_on_paper = 0;
    for (auto a : authors) newcomers_on_paper += corpus.author(a).arrival_year == year;
    for (auto a : authors) {
      if (counting == CoauthorCounting::DistinctPerYear) {
        auto& list = partners[a];
        for (auto b : authors) {
          if (b != a) list.push_back(b);
        }
      } else {
        summed[a] += authors.size() - 1;
        summed_newcomers[a] += newcomers_on_paper - (corpus.author(a).arrival_year == year ? 1 : 0);
      }
    }
  }

  auto counts_for = [&](AuthorIndex a) -> std::pair<std::size_t, std::size_t> {
    if (counting == CoauthorCounting::PerPaperSum) return {summed[a], summed_newcomers[a]};
    auto& list = partners[a];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    const auto nc = static_cast<std::size_t>(std::count_if(
        list.begin(), list.end(), [&](AuthorIndex b) { return corpus.author(b).arrival_year == year; }));
    return {list.size(), nc};
  };

  const auto classes = classify_newcomers(corpus, year);
  std::vector<char> is_mainstream(corpus.author_count(), 0);
  for (auto a : classes.mainstream) is_mainstream[a] = 1;

  double active = 0, newcomers = 0, seniors = 0, immigrants = 0, mainstream = 0, nn = 0;
  std::size_t n_active = 0, n_newcomers = 0, n_seniors = 0;
  for (auto a : corpus.active_in(year)) {
    const auto [co, nco] = counts_for(a);
    const auto c = static_cast<double>(co);
    active += c;
    ++n_active;
    if (corpus.author(a).arrival_year == year) {
      newcomers += c;
      nn += static_cast<double>(nco);
      ++n_newcomers;
      (is_mainstream[a] ? mainstream : immigrants) += c;
    } else {
      seniors += c;
      ++n_seniors;
    }
  }

  CoauthorStats s;
  s.active = mean(active, n_active);
  s.newcomers = mean(newcomers, n_newcomers);
  s.seniors = mean(seniors, n_seniors);
  s.immigrants = mean(immigrants, classes.immigrants.size());
  s.mainstream = mean(mainstream, classes.mainstream.size());
  s.newcomer_newcomer_coauthors = mean(nn, n_newcomers);
  return s;
}

std::vector<ArrivalRow> arrival_report(const Corpus& corpus, CoauthorCounting counting) {
  std::vector<ArrivalRow> rows;
  const auto& w = corpus.window();
  for (int y = w.start; y <= w.end; ++y) {
    ArrivalRow row;
    row.year = y;
    const auto classes = classify_newcomers(corpus, y);
    row.immigrants = classes.immigrants.size();
    row.mainstream = classes.mainstream.size();
    row.newcomers = row.immigrants + row.mainstream;
    if (row.newcomers > 0) {
      row.immigrant_fraction = static_cast<double>(row.immigrants) / static_cast<double>(row.newcomers);
    }
    row.motifs = motif_census(corpus, y);
    row.coauthors = coauthor_stats(corpus, y, counting);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace acadpop
