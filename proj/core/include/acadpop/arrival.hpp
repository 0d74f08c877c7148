#pragma once

#include "acadpop/corpus.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace acadpop {

/// Newcomers of one year split by whether any arrival-year paper has a senior
/// coauthor (arrival strictly earlier than the year).
struct NewcomerClasses {
  std::vector<AuthorIndex> immigrants;
  std::vector<AuthorIndex> mainstream;
};

NewcomerClasses classify_newcomers(const Corpus& corpus, int year);

/// Collaboration motif of a paper with at least one newcomer, keyed by
/// a = seniors on the paper and b = other newcomers on the paper.
enum class Motif : int {
  Solo = 0,              // a = b = 0
  NewcomersOnly,         // b > a = 0
  MoreNewcomers,         // b > a > 0
  NoFewerSeniors,        // a >= b > 0
  OneSenior,             // a = 1, b = 0
  SeveralSeniors,        // a > 1, b = 0
};

constexpr std::size_t kMotifCount = 6;

Motif classify_motif(std::size_t seniors, std::size_t other_newcomers) noexcept;
std::string_view motif_label(Motif m) noexcept;

struct MotifCensus {
  std::array<std::size_t, kMotifCount> counts{};
  std::size_t newcomer_papers = 0;

  std::size_t operator[](Motif m) const noexcept { return counts[static_cast<std::size_t>(m)]; }
  std::optional<double> fraction(Motif m) const noexcept;
};

MotifCensus motif_census(const Corpus& corpus, int year);

/// How "number of coauthors in a year" is counted.
enum class CoauthorCounting {
  DistinctPerYear,  // distinct coauthors across all of the author's papers that year
  PerPaperSum,      // sum over papers of (authors - 1)
};

/// Mean coauthor counts per cohort; nullopt when the cohort is empty.
struct CoauthorStats {
  std::optional<double> active;
  std::optional<double> newcomers;
  std::optional<double> seniors;
  std::optional<double> immigrants;
  std::optional<double> mainstream;
  /// Mean number of newcomer coauthors per newcomer.
  std::optional<double> newcomer_newcomer_coauthors;
};

CoauthorStats coauthor_stats(const Corpus& corpus, int year,
                             CoauthorCounting counting = CoauthorCounting::DistinctPerYear);

struct ArrivalRow {
  int year = 0;
  std::size_t newcomers = 0;
  std::size_t immigrants = 0;
  std::size_t mainstream = 0;
  std::optional<double> immigrant_fraction;
  MotifCensus motifs;
  CoauthorStats coauthors;
};

std::vector<ArrivalRow> arrival_report(const Corpus& corpus,
                                       CoauthorCounting counting = CoauthorCounting::DistinctPerYear);

}  // namespace acadpop
