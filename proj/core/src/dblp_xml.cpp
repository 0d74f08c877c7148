#include "acadpop/corpus.hpp"
#include "acadpop/error.hpp"
#include "xml_reader.hpp"

#include <charconv>
#include <fstream>

namespace acadpop {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<int> parse_year(std::string_view text) {
  text = trim(text);
  int year = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return year;
}

struct PendingRecord {
  std::string id;
  std::vector<std::string> authors;
  std::optional<int> year;
  bool saw_year = false;
};

}  // namespace

IngestResult ingest_dblp_xml(std::istream& in, YearWindow window) {
  CorpusBuilder builder(window);
  detail::XmlReader xml(in);

  std::optional<PendingRecord> record;
  enum class Field { None, Author, Year } field = Field::None;
  std::string field_text;
  std::size_t ordinal = 0;

  for (;;) {
    const auto event = xml.next();
    if (event == detail::XmlReader::Event::EndOfDocument) break;

    switch (event) {
      case detail::XmlReader::Event::StartElement:
        if (xml.depth() == 2) {
          ++ordinal;
          record.emplace();
          if (auto key = xml.attribute("key")) {
            record->id = std::string(*key);
          } else {
            record->id = xml.name() + "#" + std::to_string(ordinal);
          }
        } else if (xml.depth() == 3 && record) {
          field_text.clear();
          if (xml.name() == "author") {
            field = Field::Author;
          } else if (xml.name() == "year") {
            field = Field::Year;
          } else {
            field = Field::None;
          }
        }
        break;

      case detail::XmlReader::Event::Text:
        if (field != Field::None && xml.depth() >= 3) field_text += xml.text();
        break;

      case detail::XmlReader::Event::EndElement:
        if (xml.depth() == 2 && record) {
          if (field == Field::Author) {
            auto name = trim(field_text);
            if (!name.empty()) record->authors.emplace_back(name);
          } else if (field == Field::Year) {
            record->saw_year = true;
            record->year = parse_year(field_text);
          }
          field = Field::None;
        } else if (xml.depth() == 1 && record) {
          auto& report = builder.report();
          if (!record->year) {
            ++report.records_read;
            ++report.skipped_missing_year;
          } else if (record->authors.empty()) {
            ++report.records_read;
            ++report.skipped_missing_authors;
          } else {
            builder.add(std::move(record->id), *record->year, std::move(record->authors));
          }
          record.reset();
        }
        break;

      case detail::XmlReader::Event::EndOfDocument:
        break;
    }
  }

  // A document with record elements that were all skipped still yields an
  // (empty) corpus so the skip counts reach the caller.
  if (ordinal == 0) throw IngestError("no publication records found under the root element");
  IngestReport report = builder.report();
  return {std::move(builder).build(), report};
}

IngestResult ingest_dblp_xml(const std::filesystem::path& path, YearWindow window) {
  window.validate();
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open " + path.string());
  return ingest_dblp_xml(in, window);
}

}  // namespace acadpop
