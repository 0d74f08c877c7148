#include "acadpop/corpus.hpp"

#include "acadpop/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace acadpop {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
std::span<const T> year_slice(const std::vector<std::vector<T>>& table, const YearWindow& w, int year) {
  if (!w.contains(year) || table.empty()) return {};
  return table[static_cast<std::size_t>(year - w.start)];
}

}  // namespace

void YearWindow::validate() const {
  if (start > end) {
    throw ConfigError("inverted year window " + std::to_string(start) + ":" + std::to_string(end));
  }
}

YearWindow YearWindow::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("year window must look like Y0:Y1, got '" + std::string(text) + "'");
  }
  YearWindow w{parse_int(text.substr(0, colon), "window start"),
               parse_int(text.substr(colon + 1), "window end")};
  w.validate();
  return w;
}

AlivePolicy AlivePolicy::parse(std::string_view text) {
  if (text == "strict") return strict();
  if (text == "windowed") return windowed();
  constexpr std::string_view prefix = "windowed:";
  if (text.starts_with(prefix)) {
    const int w = parse_int(text.substr(prefix.size()), "alive window");
    if (w < 0) throw ConfigError("alive window must be non-negative");
    return windowed(w);
  }
  throw ConfigError("unknown alive policy '" + std::string(text) + "' (expected strict or windowed:W)");
}

std::string AlivePolicy::to_string() const {
  return kind == Kind::Strict ? "strict" : "windowed:" + std::to_string(window);
}

int AuthorRecord::papers_in(int year) const noexcept {
  auto it = std::lower_bound(papers_by_year.begin(), papers_by_year.end(), year,
                             [](const YearCount& yc, int y) { return yc.year < y; });
  return (it != papers_by_year.end() && it->year == year) ? it->papers : 0;
}

bool AuthorRecord::has_paper_between(int from, int to) const noexcept {
  auto it = std::lower_bound(papers_by_year.begin(), papers_by_year.end(), from,
                             [](const YearCount& yc, int y) { return yc.year < y; });
  return it != papers_by_year.end() && it->year <= to;
}

std::vector<int> AuthorRecord::active_years() const {
  std::vector<int> years;
  years.reserve(papers_by_year.size());
  for (const auto& yc : papers_by_year) years.push_back(yc.year);
  return years;
}

int AuthorRecord::total_papers() const noexcept {
  int total = 0;
  for (const auto& yc : papers_by_year) total += yc.papers;
  return total;
}

bool AuthorRecord::alive_in(int year, const AlivePolicy& policy) const noexcept {
  if (year < arrival_year || year > last_year) return false;
  if (policy.kind == AlivePolicy::Kind::Strict) return true;
  return has_paper_between(year, year + policy.window);
}

PaperView Corpus::paper(PaperIndex index) const {
  const auto begin = author_offsets_.at(index);
  const auto end = author_offsets_.at(index + 1);
  return {paper_ids_[index], paper_years_[index],
          std::span<const AuthorIndex>(author_refs_).subspan(begin, end - begin)};
}

Paper Corpus::materialize(PaperIndex index) const {
  const auto view = paper(index);
  Paper p{std::string(view.id), view.year, {}};
  p.authors.reserve(view.authors.size());
  for (auto a : view.authors) p.authors.push_back(authors_[a].id);
  return p;
}

std::optional<AuthorIndex> Corpus::find_author(std::string_view id) const {
  auto it = author_lookup_.find(std::string(id));
  if (it == author_lookup_.end()) return std::nullopt;
  return it->second;
}

std::span<const PaperIndex> Corpus::papers_in(int year) const noexcept {
  return year_slice(papers_by_year_, window_, year);
}

std::span<const AuthorIndex> Corpus::newcomers_in(int year) const noexcept {
  return year_slice(newcomers_by_year_, window_, year);
}

std::span<const AuthorIndex> Corpus::active_in(int year) const noexcept {
  return year_slice(active_by_year_, window_, year);
}

CorpusBuilder::CorpusBuilder(YearWindow window) {
  window.validate();
  corpus_.window_ = window;
}

AuthorIndex CorpusBuilder::intern(std::string&& author) {
  auto [it, inserted] =
      corpus_.author_lookup_.try_emplace(author, static_cast<AuthorIndex>(corpus_.authors_.size()));
  if (inserted) {
    AuthorRecord rec;
    rec.id = std::move(author);
    corpus_.authors_.push_back(std::move(rec));
  }
  return it->second;
}

bool CorpusBuilder::add(std::string id, int year, std::vector<std::string> authors) {
  ++report_.records_read;
  if (!seen_ids_.insert(id).second) {
    throw IngestError("duplicate paper id '" + id + "'");
  }
  if (authors.empty()) {
    ++report_.rejected_empty_authors;
    return false;
  }
  if (!corpus_.window_.contains(year)) {
    ++report_.dropped_out_of_window;
    return false;
  }

  scratch_.clear();
  for (auto& name : authors) {
    const AuthorIndex a = intern(std::move(name));
    if (std::find(scratch_.begin(), scratch_.end(), a) != scratch_.end()) {
      ++report_.duplicate_authors_collapsed;
      continue;
    }
    scratch_.push_back(a);
  }

  for (auto a : scratch_) {
    auto& pby = corpus_.authors_[a].papers_by_year;
    auto it = std::lower_bound(pby.begin(), pby.end(), year,
                               [](const YearCount& yc, int y) { return yc.year < y; });
    if (it != pby.end() && it->year == year) {
      ++it->papers;
    } else {
      pby.insert(it, YearCount{year, 1});
    }
  }

  corpus_.paper_ids_.push_back(std::move(id));
  corpus_.paper_years_.push_back(year);
  corpus_.author_refs_.insert(corpus_.author_refs_.end(), scratch_.begin(), scratch_.end());
  corpus_.author_offsets_.push_back(static_cast<std::uint32_t>(corpus_.author_refs_.size()));
  ++report_.papers_kept;
  return true;
}

Corpus CorpusBuilder::build() && {
  Corpus& c = corpus_;
  const auto years = static_cast<std::size_t>(c.window_.size());
  c.papers_by_year_.assign(years, {});
  c.newcomers_by_year_.assign(years, {});
  c.active_by_year_.assign(years, {});

  for (PaperIndex p = 0; p < c.paper_years_.size(); ++p) {
    c.papers_by_year_[static_cast<std::size_t>(c.paper_years_[p] - c.window_.start)].push_back(p);
  }
  for (AuthorIndex a = 0; a < c.authors_.size(); ++a) {
    auto& rec = c.authors_[a];
    rec.arrival_year = rec.papers_by_year.front().year;
    rec.last_year = rec.papers_by_year.back().year;
    c.newcomers_by_year_[static_cast<std::size_t>(rec.arrival_year - c.window_.start)].push_back(a);
    for (const auto& yc : rec.papers_by_year) {
      c.active_by_year_[static_cast<std::size_t>(yc.year - c.window_.start)].push_back(a);
    }
  }
  seen_ids_.clear();
  return std::move(corpus_);
}

namespace {

std::string id_from_json(const nlohmann::json& value, std::size_t line, std::string_view field) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw ParseError(line, std::string(field) + " must be a string or integer");
}

}  // namespace

IngestResult ingest_jsonl(std::istream& in, YearWindow window) {
  CorpusBuilder builder(window);
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) throw ParseError(line, "record must be a JSON object");
    for (const char* field : {"id", "year", "authors"}) {
      if (!record.contains(field)) throw ParseError(line, std::string("missing field '") + field + "'");
    }
    const auto& year = record["year"];
    if (!year.is_number_integer()) throw ParseError(line, "year must be an integer");
    const auto& authors = record["authors"];
    if (!authors.is_array()) throw ParseError(line, "authors must be an array");

    std::vector<std::string> names;
    names.reserve(authors.size());
    for (const auto& a : authors) names.push_back(id_from_json(a, line, "author"));
    builder.add(id_from_json(record["id"], line, "id"), year.get<int>(), std::move(names));
  }
  IngestReport report = builder.report();
  return {std::move(builder).build(), report};
}

IngestResult ingest_jsonl(const std::filesystem::path& path, YearWindow window) {
  window.validate();
  std::ifstream in(path);
  if (!in) throw IngestError("cannot open " + path.string());
  return ingest_jsonl(in, window);
}

void write_jsonl(const Corpus& corpus, std::ostream& out) {
  for (PaperIndex p = 0; p < corpus.paper_count(); ++p) {
    const auto view = corpus.paper(p);
    nlohmann::json authors = nlohmann::json::array();
    for (auto a : view.authors) authors.push_back(corpus.author(a).id);
    nlohmann::json record;
    record["id"] = view.id;
    record["year"] = view.year;
    record["authors"] = std::move(authors);
    out << record.dump() << '\n';
  }
}

std::vector<YearStats> stats(const Corpus& corpus, const AlivePolicy& policy) {
  const auto& w = corpus.window();
  std::vector<YearStats> rows;
  rows.reserve(static_cast<std::size_t>(w.size()));
  for (int y = w.start; y <= w.end; ++y) {
    rows.push_back({y, corpus.active_in(y).size(), 0, corpus.publications_in(y)});
  }
  for (const auto& rec : corpus.authors()) {
    const int last = std::min(rec.last_year, w.end);
    for (int y = rec.arrival_year; y <= last; ++y) {
      if (rec.alive_in(y, policy)) ++rows[static_cast<std::size_t>(y - w.start)].alive;
    }
  }
  return rows;
}

}  // namespace acadpop
