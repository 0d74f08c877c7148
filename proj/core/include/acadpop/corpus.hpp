#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace acadpop {

using AuthorIndex = std::uint32_t;
using PaperIndex = std::uint32_t;

/// Inclusive calendar-year range.
struct YearWindow {
  int start = 1960;
  int end = 2009;

  bool contains(int year) const noexcept { return year >= start && year <= end; }
  int size() const noexcept { return end - start + 1; }

  /// Throws ConfigError when start > end.
  void validate() const;
  /// Parses "Y0:Y1".
  static YearWindow parse(std::string_view text);

  friend bool operator==(const YearWindow&, const YearWindow&) = default;
};

/// Which authors count as alive in a given year.
///
/// Strict: arrival <= y <= last publication year.
/// Windowed(W): as strict, and additionally a paper in [y, y + W].
struct AlivePolicy {
  enum class Kind { Strict, Windowed };

  Kind kind = Kind::Windowed;
  int window = 5;

  static AlivePolicy strict() { return {Kind::Strict, 0}; }
  static AlivePolicy windowed(int w = 5) { return {Kind::Windowed, w}; }
  /// "strict" or "windowed" / "windowed:W".
  static AlivePolicy parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const AlivePolicy&, const AlivePolicy&) = default;
};

/// One publication record as read from input.
struct Paper {
  std::string id;
  int year = 0;
  std::vector<std::string> authors;

  friend bool operator==(const Paper&, const Paper&) = default;
};

struct YearCount {
  int year = 0;
  int papers = 0;

  friend bool operator==(const YearCount&, const YearCount&) = default;
};

/// Lifecycle of a single author derived from the papers of a corpus.
struct AuthorRecord {
  std::string id;
  int arrival_year = 0;
  int last_year = 0;
  std::vector<YearCount> papers_by_year;  // sorted by year, counts >= 1

  int papers_in(int year) const noexcept;
  bool active_in(int year) const noexcept { return papers_in(year) > 0; }
  /// True when some paper falls in [from, to].
  bool has_paper_between(int from, int to) const noexcept;
  std::vector<int> active_years() const;
  std::size_t active_year_count() const noexcept { return papers_by_year.size(); }
  int total_papers() const noexcept;
  bool alive_in(int year, const AlivePolicy& policy) const noexcept;
};

/// Lightweight view of a stored paper.
struct PaperView {
  std::string_view id;
  int year = 0;
  std::span<const AuthorIndex> authors;
};

/// Counts gathered while turning raw records into a corpus.
struct IngestReport {
  std::size_t records_read = 0;
  std::size_t papers_kept = 0;
  std::size_t dropped_out_of_window = 0;
  std::size_t duplicate_authors_collapsed = 0;
  std::size_t rejected_empty_authors = 0;
  std::size_t skipped_missing_year = 0;
  std::size_t skipped_missing_authors = 0;
};

class CorpusBuilder;

/// Immutable, indexed collection of papers and derived author records over a
/// year window. Papers are stored column-wise; author lists live in one flat
/// array addressed by per-paper offsets.
class Corpus {
 public:
  Corpus() = default;

  const YearWindow& window() const noexcept { return window_; }
  std::size_t paper_count() const noexcept { return paper_years_.size(); }
  std::size_t author_count() const noexcept { return authors_.size(); }
  bool empty() const noexcept { return paper_years_.empty(); }

  PaperView paper(PaperIndex index) const;
  Paper materialize(PaperIndex index) const;

  const AuthorRecord& author(AuthorIndex index) const { return authors_.at(index); }
  std::span<const AuthorRecord> authors() const noexcept { return authors_; }
  std::optional<AuthorIndex> find_author(std::string_view id) const;

  /// Papers published in `year`, in input order. Empty outside the window.
  std::span<const PaperIndex> papers_in(int year) const noexcept;
  /// Authors whose arrival year is `year`.
  std::span<const AuthorIndex> newcomers_in(int year) const noexcept;
  /// Authors with at least one paper in `year`.
  std::span<const AuthorIndex> active_in(int year) const noexcept;

  std::size_t publications_in(int year) const noexcept { return papers_in(year).size(); }

 private:
  friend class CorpusBuilder;

  YearWindow window_;
  std::vector<std::string> paper_ids_;
  std::vector<int> paper_years_;
  std::vector<std::uint32_t> author_offsets_{0};
  std::vector<AuthorIndex> author_refs_;
  std::vector<AuthorRecord> authors_;
  std::unordered_map<std::string, AuthorIndex> author_lookup_;
  std::vector<std::vector<PaperIndex>> papers_by_year_;
  std::vector<std::vector<AuthorIndex>> newcomers_by_year_;
  std::vector<std::vector<AuthorIndex>> active_by_year_;
};

/// Validates and accumulates records, then freezes them into a Corpus.
///
/// Records outside the window are dropped and counted. Repeated author ids
/// within one paper collapse to their first occurrence. Records with an empty
/// author list are rejected and counted. A repeated paper id is an error.
class CorpusBuilder {
 public:
  explicit CorpusBuilder(YearWindow window);

  /// Returns true when the record was kept.
  bool add(std::string id, int year, std::vector<std::string> authors);
  bool add(Paper paper) {
    return add(std::move(paper.id), paper.year, std::move(paper.authors));
  }

  IngestReport& report() noexcept { return report_; }
  const IngestReport& report() const noexcept { return report_; }

  Corpus build() &&;

 private:
  AuthorIndex intern(std::string&& author);

  Corpus corpus_;
  IngestReport report_;
  std::unordered_set<std::string> seen_ids_;
  std::vector<AuthorIndex> scratch_;
};

struct IngestResult {
  Corpus corpus;
  IngestReport report;
};

/// Reads line-delimited JSON records {"id", "year", "authors"}.
IngestResult ingest_jsonl(const std::filesystem::path& path, YearWindow window);
IngestResult ingest_jsonl(std::istream& in, YearWindow window);

/// Reads a DBLP-style XML stream; every child of the root element carrying
/// <author> children and a <year> child becomes a paper.
IngestResult ingest_dblp_xml(const std::filesystem::path& path, YearWindow window);
IngestResult ingest_dblp_xml(std::istream& in, YearWindow window);

/// Writes the corpus in the canonical JSONL format, one paper per line.
void write_jsonl(const Corpus& corpus, std::ostream& out);

/// Per-year population counts.
struct YearStats {
  int year = 0;
  std::size_t active = 0;
  std::size_t alive = 0;
  std::size_t publications = 0;
};

std::vector<YearStats> stats(const Corpus& corpus, const AlivePolicy& policy = AlivePolicy::strict());

}  // namespace acadpop
