#include "coord/cli.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "coord/render.hpp"

namespace coord::cli {

namespace {

constexpr std::size_t kMaxRenderedTrees = 64;

bool is_strip_char(char c) {
  switch (c) {
    case ',':
    case '.':
    case '!':
    case '?':
    case ';':
    case ':':
      return true;
    default:
      return false;
  }
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    while (!cur.empty() && is_strip_char(cur.back())) cur.pop_back();
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
      continue;
    }
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    cur += c;
  }
  flush();
  return out;
}

std::vector<Judgment> load_corpus(std::istream& in) {
  std::vector<Judgment> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    bool accept;
    if (t.rfind("OK ", 0) == 0)
      accept = true;
    else if (t.rfind("NO ", 0) == 0)
      accept = false;
    else
      throw CorpusError(lineno, "expected \"OK <sentence>\" or \"NO <sentence>\"");
    const std::string sentence = trim(t.substr(3));
    if (sentence.empty()) throw CorpusError(lineno, "empty sentence");
    out.push_back(Judgment{accept, sentence, lineno});
  }
  return out;
}

std::vector<JudgmentOutcome> run_corpus(const Lexicon& lex, const std::vector<Judgment>& corpus,
                                        const ParseConfig& config) {
  std::vector<JudgmentOutcome> out;
  out.reserve(corpus.size());
  for (const Judgment& j : corpus) {
    JudgmentOutcome o{j, false, false, ""};
    try {
      const ParseForest forest = parse(tokenize(j.sentence), lex, config);
      o.accepted = !forest.roots.empty();
      o.matched = o.accepted == j.accept;
    } catch (const std::exception& e) {
      o.note = e.what();
      o.matched = false;
    }
    out.push_back(std::move(o));
  }
  return out;
}

CmdResult cmd_parse(const ParseOptions& opts) try {
  CmdResult res;
  Lexicon lex = Lexicon::load_file(opts.lexicon_path);
  ParseConfig config;
  config.root_part = opts.root;
  config.max_tuple = opts.max_tuple;
  if (!lex.parts().find(opts.root)) {
    res.status = 2;
    res.err = "unknown root part: " + opts.root + "\n";
    return res;
  }
  const std::vector<std::string> tokens = tokenize(opts.sentence);
  if (tokens.empty()) {
    res.status = 2;
    res.err = "empty sentence\n";
    return res;
  }
  const ParseForest forest = parse(tokens, lex, config);
  if (forest.roots.empty()) {
    res.status = 1;
    res.out = "no analysis\n";
    return res;
  }
  if (opts.all) {
    std::size_t k = 0;
    for (EdgeId root : forest.roots) {
      for (const std::string& tree : render_trees(forest.chart, root, kMaxRenderedTrees)) {
        res.out += "analysis " + std::to_string(++k) + ":\n" + tree;
      }
    }
  } else {
    res.out = render_tree(forest.chart, forest.roots.front());
  }
  res.status = 0;
  return res;
} catch (const std::exception& e) {
  return CmdResult{2, "", std::string(e.what()) + "\n"};
}

CmdResult cmd_corpus(const CorpusOptions& opts) try {
  CmdResult res;
  Lexicon lex = Lexicon::load_file(opts.lexicon_path);
  std::ifstream in(opts.corpus_path);
  if (!in) {
    res.status = 2;
    res.err = "cannot open corpus file: " + opts.corpus_path + "\n";
    return res;
  }
  ParseConfig config;
  config.root_part = opts.root;
  config.max_tuple = opts.max_tuple;
  const std::vector<Judgment> corpus = load_corpus(in);
  const std::vector<JudgmentOutcome> outcomes = run_corpus(lex, corpus, config);
  std::size_t matched = 0;
  std::ostringstream report;
  for (const JudgmentOutcome& o : outcomes) {
    report << (o.matched ? "PASS" : "FAIL") << "  line " << o.judgment.line << ": "
           << (o.judgment.accept ? "OK " : "NO ") << o.judgment.sentence;
    if (!o.matched) {
      if (!o.note.empty())
        report << "  [" << o.note << "]";
      else
        report << "  [expected " << (o.judgment.accept ? "accept" : "reject") << ", parser "
               << (o.accepted ? "accepted" : "rejected") << "]";
    }
    report << '\n';
    if (o.matched) ++matched;
  }
  report << matched << "/" << outcomes.size() << " judgments matched\n";
  res.out = report.str();
  res.status = matched == outcomes.size() ? 0 : 1;
  return res;
} catch (const std::exception& e) {
  return CmdResult{2, "", std::string(e.what()) + "\n"};
}

}  // namespace coord::cli
