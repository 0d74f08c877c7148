#include "acadpop/productivity.hpp"

namespace acadpop {

namespace {

bool in_cohort(const AuthorRecord& rec, int year, Cohort cohort, const ProductivityOptions& options) {
  switch (cohort) {
    case Cohort::AllActive:
      return true;
    case Cohort::Transient:
      return rec.active_year_count() == 1;
    case Cohort::Career:
      return year - rec.arrival_year + 1 >= options.career_min_age;
    case Cohort::Newcomer:
      return rec.arrival_year == year;
  }
  return false;
}

}  // namespace

std::string_view cohort_name(Cohort c) noexcept {
  switch (c) {
    case Cohort::AllActive:
      return "all";
    case Cohort::Transient:
      return "transient";
    case Cohort::Career:
      return "career";
    case Cohort::Newcomer:
      return "newcomer";
  }
  return "?";
}

std::optional<double> ip(const Corpus& corpus, int year, Cohort cohort, const ProductivityOptions& options) {
  std::size_t members = 0;
  double claimed = 0;
  for (auto a : corpus.active_in(year)) {
    const auto& rec = corpus.author(a);
    if (!in_cohort(rec, year, cohort, options)) continue;
    ++members;
    claimed += rec.papers_in(year);
  }
  if (members == 0) return std::nullopt;
  return claimed / static_cast<double>(members);
}

std::optional<double> cp(const Corpus& corpus, int year, Cohort cohort, const ProductivityOptions& options) {
  std::size_t members = 0;
  for (auto a : corpus.active_in(year)) members += in_cohort(corpus.author(a), year, cohort, options);
  if (members == 0) return std::nullopt;

  std::size_t papers = 0;
  for (auto p : corpus.papers_in(year)) {
    for (auto a : corpus.paper(p).authors) {
      if (in_cohort(corpus.author(a), year, cohort, options)) {
        ++papers;
        break;
      }
    }
  }
  return static_cast<double>(papers) / static_cast<double>(members);
}

std::optional<double> fractional_ip(const Corpus& corpus, int year) {
  const auto active = corpus.active_in(year);
  if (active.empty()) return std::nullopt;
  double claims = 0;
  for (auto p : corpus.papers_in(year)) {
    const auto n = corpus.paper(p).authors.size();
    const double share = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) claims += share;
  }
  return claims / static_cast<double>(active.size());
}

std::optional<double> authors_per_paper(const Corpus& corpus, int year) {
  const auto papers = corpus.papers_in(year);
  if (papers.empty()) return std::nullopt;
  std::size_t total = 0;
  for (auto p : papers) total += corpus.paper(p).authors.size();
  return static_cast<double>(total) / static_cast<double>(papers.size());
}

std::vector<ProductivityRow> productivity_report(const Corpus& corpus, const ProductivityOptions& options) {
  std::vector<ProductivityRow> rows;
  const auto& w = corpus.window();
  for (int y = w.start; y <= w.end; ++y) {
    ProductivityRow r;
    r.year = y;
    r.ip_all = ip(corpus, y, Cohort::AllActive, options);
    r.cp_all = cp(corpus, y, Cohort::AllActive, options);
    r.ip_transient = ip(corpus, y, Cohort::Transient, options);
    r.cp_transient = cp(corpus, y, Cohort::Transient, options);
    r.ip_career = ip(corpus, y, Cohort::Career, options);
    r.cp_career = cp(corpus, y, Cohort::Career, options);
    r.newcomer_ip = ip(corpus, y, Cohort::Newcomer, options);
    r.authors_per_paper = authors_per_paper(corpus, y);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace acadpop
