#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acadpop::detail {

/// Minimal pull parser for well-formed XML streams such as the DBLP dump.
///
/// Handles elements, attributes, character data, CDATA, comments, processing
/// instructions and a DOCTYPE with an internal subset. Predefined, numeric and
/// the HTML Latin-1 named entities are decoded; any other entity reference is
/// passed through verbatim. Errors throw XmlError with the byte offset.
class XmlReader {
 public:
  enum class Event { StartElement, EndElement, Text, EndOfDocument };

  explicit XmlReader(std::istream& in);

  Event next();

  const std::string& name() const noexcept { return name_; }
  const std::string& text() const noexcept { return text_; }
  std::optional<std::string_view> attribute(std::string_view key) const;
  /// Element nesting depth after the current event; the root element is depth 1.
  std::size_t depth() const noexcept { return stack_.size(); }
  std::size_t offset() const noexcept { return offset_; }

 private:
  int get();
  int peek();
  [[noreturn]] void fail(const std::string& what) const;
  void expect(std::string_view literal);
  void skip_until(std::string_view terminator);
  void skip_doctype();
  void skip_space();
  std::string read_name();
  void read_reference(std::string& out);
  void read_tag();
  void read_end_tag();

  std::istream& in_;
  std::array<char, 1 << 16> buffer_{};
  std::size_t pos_ = 0;
  std::size_t len_ = 0;
  std::size_t offset_ = 0;

  std::string name_;
  std::string text_;
  std::vector<std::pair<std::string, std::string>> attributes_;
  std::vector<std::string> stack_;
  bool pending_end_ = false;
  bool seen_root_ = false;
};

}  // namespace acadpop::detail
