#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acadpop {

/// Invalid user configuration (window, policy, simulation parameters).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data could not be turned into a corpus.
class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A JSONL record failed to parse; carries the 1-based line number.
class ParseError : public IngestError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : IngestError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Malformed XML; carries the byte offset where the problem was detected.
class XmlError : public IngestError {
 public:
  XmlError(std::size_t offset, const std::string& what)
      : IngestError("byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace acadpop
