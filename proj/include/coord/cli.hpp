#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "coord/parser.hpp"

namespace coord::cli {

// Lowercases ASCII letters, splits on whitespace, strips commas and
// terminal punctuation; apostrophes stay inside tokens.
std::vector<std::string> tokenize(std::string_view text);

// One judgment line of a corpus file: "OK <sentence>" or "NO <sentence>".
struct Judgment {
  bool accept = false;
  std::string sentence;
  std::size_t line = 0;
};

// Throws CorpusError with the offending line number.
std::vector<Judgment> load_corpus(std::istream& in);

struct JudgmentOutcome {
  Judgment judgment;
  bool accepted = false;   // what the parser did
  bool matched = false;    // accepted == judgment.accept and no error
  std::string note;        // diagnostics for errors
};

std::vector<JudgmentOutcome> run_corpus(const Lexicon& lex, const std::vector<Judgment>& corpus,
                                        const ParseConfig& config);

struct ParseOptions {
  std::string lexicon_path;
  std::string sentence;
  std::size_t max_tuple = 3;
  bool all = false;
  std::string root = "S";
};

struct CorpusOptions {
  std::string lexicon_path;
  std::string corpus_path;
  std::size_t max_tuple = 3;
  std::string root = "S";
};

// Exit status plus the text for stdout/stderr. Statuses: 0 = at least one
// analysis (all judgments matched for corpora), 1 = no analysis (some
// judgment mismatched), 2 = usage, lexicon or input error.
struct CmdResult {
  int status = 0;
  std::string out;
  std::string err;
};

CmdResult cmd_parse(const ParseOptions& opts);
CmdResult cmd_corpus(const CorpusOptions& opts);

}  // namespace coord::cli
