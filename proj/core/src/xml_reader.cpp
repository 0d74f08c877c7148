#include "xml_reader.hpp"

#include "acadpop/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace acadpop::detail {

namespace {

// HTML 4 Latin-1 entities, code points 160..255 in order.
constexpr std::array<std::string_view, 96> kLatin1Entities = {
    "nbsp",   "iexcl", "cent",   "pound",  "curren", "yen",    "brvbar", "sect",   "uml",    "copy",
    "ordf",   "laquo", "not",    "shy",    "reg",    "macr",   "deg",    "plusmn", "sup2",   "sup3",
    "acute",  "micro", "para",   "middot", "cedil",  "sup1",   "ordm",   "raquo",  "frac14", "frac12",
    "frac34", "iquest", "Agrave", "Aacute", "Acirc", "Atilde", "Auml",   "Aring",  "AElig",  "Ccedil",
    "Egrave", "Eacute", "Ecirc",  "Euml",   "Igrave", "Iacute", "Icirc",  "Iuml",   "ETH",    "Ntilde",
    "Ograve", "Oacute", "Ocirc",  "Otilde", "Ouml",   "times",  "Oslash", "Ugrave", "Uacute", "Ucirc",
    "Uuml",   "Yacute", "THORN",  "szlig",  "agrave", "aacute", "acirc",  "atilde", "auml",   "aring",
    "aelig",  "ccedil", "egrave", "eacute", "ecirc",  "euml",   "igrave", "iacute", "icirc",  "iuml",
    "eth",    "ntilde", "ograve", "oacute", "ocirc",  "otilde", "ouml",   "divide", "oslash", "ugrave",
    "uacute", "ucirc",  "uuml",   "yacute", "thorn",  "yuml"};

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_space(int c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_name_char(int c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == ':' || c == '-' || c == '.' || c >= 0x80;
}

}  // namespace

XmlReader::XmlReader(std::istream& in) : in_(in) {}

int XmlReader::peek() {
  if (pos_ == len_) {
    in_.read(buffer_.data(), static_cast<std::streamsize>(buffer_.size()));
    len_ = static_cast<std::size_t>(in_.gcount());
    pos_ = 0;
    if (len_ == 0) return -1;
  }
  return static_cast<unsigned char>(buffer_[pos_]);
}

int XmlReader::get() {
  const int c = peek();
  if (c >= 0) {
    ++pos_;
    ++offset_;
  }
  return c;
}

void XmlReader::fail(const std::string& what) const { throw XmlError(offset_, what); }

void XmlReader::expect(std::string_view literal) {
  for (char ch : literal) {
    if (get() != static_cast<unsigned char>(ch)) fail("expected '" + std::string(literal) + "'");
  }
}

void XmlReader::skip_until(std::string_view terminator) {
  std::size_t matched = 0;
  while (matched < terminator.size()) {
    const int c = get();
    if (c < 0) fail("unterminated construct, expected '" + std::string(terminator) + "'");
    if (c == static_cast<unsigned char>(terminator[matched])) {
      ++matched;
    } else {
      matched = (c == static_cast<unsigned char>(terminator[0])) ? 1 : 0;
    }
  }
}

void XmlReader::skip_doctype() {
  int brackets = 0;
  for (;;) {
    const int c = get();
    if (c < 0) fail("unterminated DOCTYPE");
    if (c == '[') ++brackets;
    if (c == ']') --brackets;
    if (c == '>' && brackets <= 0) return;
  }
}

void XmlReader::skip_space() {
  while (is_space(peek())) get();
}

std::string XmlReader::read_name() {
  std::string out;
  while (is_name_char(peek())) out.push_back(static_cast<char>(get()));
  if (out.empty()) fail("expected a name");
  return out;
}

void XmlReader::read_reference(std::string& out) {
  std::string ref;
  for (;;) {
    const int c = get();
    if (c < 0) fail("unterminated entity reference");
    if (c == ';') break;
    if (is_space(c) || c == '<' || c == '&' || ref.size() > 32) fail("malformed entity reference");
    ref.push_back(static_cast<char>(c));
  }
  if (ref.empty()) fail("empty entity reference");

  if (ref[0] == '#') {
    const bool hex = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X');
    const std::string_view digits = std::string_view(ref).substr(hex ? 2 : 1);
    std::uint32_t cp = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, hex ? 16 : 10);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || cp > 0x10FFFF) {
      fail("bad character reference '&" + ref + ";'");
    }
    append_utf8(out, cp);
    return;
  }
  if (ref == "amp") return out.push_back('&');
  if (ref == "lt") return out.push_back('<');
  if (ref == "gt") return out.push_back('>');
  if (ref == "quot") return out.push_back('"');
  if (ref == "apos") return out.push_back('\'');
  auto it = std::find(kLatin1Entities.begin(), kLatin1Entities.end(), ref);
  if (it != kLatin1Entities.end()) {
    append_utf8(out, static_cast<std::uint32_t>(160 + (it - kLatin1Entities.begin())));
    return;
  }
  out += '&';
  out += ref;
  out += ';';
}

void XmlReader::read_end_tag() {
  name_ = read_name();
  skip_space();
  if (get() != '>') fail("expected '>' in end tag");
  if (stack_.empty() || stack_.back() != name_) {
    fail("mismatched end tag </" + name_ + ">" +
         (stack_.empty() ? std::string() : ", expected </" + stack_.back() + ">"));
  }
  stack_.pop_back();
}

void XmlReader::read_tag() {
  if (seen_root_ && stack_.empty()) fail("content after the root element");
  name_ = read_name();
  attributes_.clear();
  for (;;) {
    skip_space();
    const int c = peek();
    if (c < 0) fail("unterminated start tag <" + name_ + ">");
    if (c == '>') {
      get();
      break;
    }
    if (c == '/') {
      get();
      if (get() != '>') fail("expected '>' after '/'");
      pending_end_ = true;
      break;
    }
    std::string key = read_name();
    skip_space();
    if (get() != '=') fail("expected '=' after attribute " + key);
    skip_space();
    const int quote = get();
    if (quote != '"' && quote != '\'') fail("attribute value must be quoted");
    std::string value;
    for (;;) {
      const int v = get();
      if (v < 0) fail("unterminated attribute value");
      if (v == quote) break;
      if (v == '<') fail("'<' in attribute value");
      if (v == '&') {
        read_reference(value);
      } else {
        value.push_back(static_cast<char>(v));
      }
    }
    attributes_.emplace_back(std::move(key), std::move(value));
  }
  stack_.push_back(name_);
  seen_root_ = true;
}

XmlReader::Event XmlReader::next() {
  if (pending_end_) {
    pending_end_ = false;
    stack_.pop_back();
    return Event::EndElement;
  }
  for (;;) {
    text_.clear();
    while (peek() >= 0 && peek() != '<') {
      const int c = get();
      if (c == '&') {
        read_reference(text_);
      } else {
        text_.push_back(static_cast<char>(c));
      }
    }
    if (!text_.empty()) {
      if (stack_.empty()) {
        if (std::all_of(text_.begin(), text_.end(), [](char ch) { return is_space(ch); })) continue;
        fail("character data outside the root element");
      }
      return Event::Text;
    }
    if (peek() < 0) {
      if (!stack_.empty()) fail("unexpected end of document inside <" + stack_.back() + ">");
      if (!seen_root_) fail("document has no root element");
      return Event::EndOfDocument;
    }

    get();  // '<'
    const int c = peek();
    if (c == '?') {
      skip_until("?>");
      continue;
    }
    if (c == '!') {
      get();
      if (peek() == '-') {
        expect("--");
        skip_until("-->");
        continue;
      }
      if (peek() == '[') {
        expect("[CDATA[");
        if (stack_.empty()) fail("CDATA outside the root element");
        std::string data;
        std::size_t matched = 0;
        constexpr std::string_view end = "]]>";
        while (matched < end.size()) {
          const int d = get();
          if (d < 0) fail("unterminated CDATA section");
          data.push_back(static_cast<char>(d));
          matched = (d == end[matched]) ? matched + 1 : (d == ']' ? 1 : 0);
        }
        data.resize(data.size() - end.size());
        text_ = std::move(data);
        return Event::Text;
      }
      expect("DOCTYPE");
      skip_doctype();
      continue;
    }
    if (c == '/') {
      get();
      read_end_tag();
      return Event::EndElement;
    }
    read_tag();
    return Event::StartElement;
  }
}

std::optional<std::string_view> XmlReader::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes_) {
    if (k == key) return std::string_view(v);
  }
  return std::nullopt;
}

}  // namespace acadpop::detail
