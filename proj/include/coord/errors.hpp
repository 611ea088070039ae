#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coord {

// Load-time error in a lexicon file, carrying the 1-based line number.
class LexiconError : public std::runtime_error {
 public:
  LexiconError(std::size_t line, const std::string& what)
      : std::runtime_error("lexicon line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Malformed judgment corpus line.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, const std::string& what)
      : std::runtime_error("corpus line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Input tokens not covered by any lexical entry at any match length.
class UnknownTokenError : public std::runtime_error {
 public:
  explicit UnknownTokenError(std::vector<std::string> tokens)
      : std::runtime_error(format(tokens)), tokens_(std::move(tokens)) {}
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  static std::string format(const std::vector<std::string>& tokens) {
    std::string msg = "unknown token";
    if (tokens.size() > 1) msg += 's';
    msg += ':';
    for (const auto& t : tokens) {
      msg += " \"";
      msg += t;
      msg += '"';
    }
    return msg;
  }
  std::vector<std::string> tokens_;
};

// Chart grew past the configured edge cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coord
