#pragma once

#include "acadpop/corpus.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace acadpop {

/// Active-author subsets used for productivity comparisons.
enum class Cohort {
  AllActive,
  Transient,  // exactly one distinct active year in the whole corpus
  Career,     // academic age (t - arrival + 1) >= career_min_age
  Newcomer,   // arrival year == t
};

std::string_view cohort_name(Cohort c) noexcept;

struct ProductivityOptions {
  int career_min_age = 10;
};

/// Individual productivity: mean number of claimed (whole) papers per cohort
/// member in `year`. nullopt for an empty cohort.
std::optional<double> ip(const Corpus& corpus, int year, Cohort cohort = Cohort::AllActive,
                         const ProductivityOptions& options = {});

/// Community productivity: papers with at least one cohort author divided by
/// the number of active cohort members. For AllActive this is
/// publications / active authors.
std::optional<double> cp(const Corpus& corpus, int year, Cohort cohort = Cohort::AllActive,
                         const ProductivityOptions& options = {});

/// Mean over active authors of fractional claims (1 / |authors| per paper).
/// Identical to cp(year, AllActive).
std::optional<double> fractional_ip(const Corpus& corpus, int year);

std::optional<double> authors_per_paper(const Corpus& corpus, int year);

struct ProductivityRow {
  int year = 0;
  std::optional<double> ip_all, cp_all;
  std::optional<double> ip_transient, cp_transient;
  std::optional<double> ip_career, cp_career;
  std::optional<double> newcomer_ip;
  std::optional<double> authors_per_paper;
};

std::vector<ProductivityRow> productivity_report(const Corpus& corpus, const ProductivityOptions& options = {});

}  // namespace acadpop
