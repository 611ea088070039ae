#include "coord/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

#include "coord/unify.hpp"

namespace coord {

namespace {

std::string ascii_lower(std::string s) {
  for (char& c : s)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Tok {
  enum Kind { Word, Punct, Quoted, End } kind = End;
  std::string text;
};

bool is_punct_char(char c) {
  switch (c) {
    case '[':
    case ']':
    case '{':
    case '}':
    case '|':
    case ',':
    case '=':
    case ':':
      return true;
    default:
      return false;
  }
}

}  // namespace

// Line-oriented recursive-descent reader for the lexicon text format.
class LexiconParser {
 public:
  Lexicon parse(std::istream& in) {
    std::string line;
    lineno_ = 0;
    while (std::getline(in, line)) {
      ++lineno_;
      scan(line);
      if (toks_.empty()) continue;
      const Tok head = next();
      if (head.kind != Tok::Word) fail("expected a directive");
      if (head.text == "part")
        parse_part();
      else if (head.text == "feature")
        parse_feature();
      else if (head.text == "entry")
        parse_entry();
      else if (head.text == "adjunct")
        parse_adjunct();
      else if (head.text == "conj")
        parse_conj();
      else
        fail("unknown directive: " + head.text);
      if (pos_ != toks_.size()) fail("trailing material after directive");
    }
    expand_adjuncts();
    build_conj_entries();
    for (const LexEntry& e : lex_.entries_)
      lex_.max_phon_length_ = std::max(lex_.max_phon_length_, e.phon.size());
    if (!lex_.conj_entries_.empty())
      lex_.max_phon_length_ = std::max<std::size_t>(lex_.max_phon_length_, 1);
    return std::move(lex_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw LexiconError(lineno_, msg); }

  void scan(const std::string& line) {
    toks_.clear();
    pos_ = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      const char c = line[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '#') break;
      if (is_punct_char(c)) {
        toks_.push_back({Tok::Punct, std::string(1, c)});
        ++i;
        continue;
      }
      if (c == '"') {
        const std::size_t close = line.find('"', i + 1);
        if (close == std::string::npos) fail("unterminated quote");
        toks_.push_back({Tok::Quoted, line.substr(i + 1, close - i - 1)});
        i = close + 1;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
             !is_punct_char(line[j]) && line[j] != '"' && line[j] != '#')
        ++j;
      toks_.push_back({Tok::Word, line.substr(i, j - i)});
      i = j;
    }
  }

  const Tok& peek() const {
    static const Tok kEnd{};
    return pos_ < toks_.size() ? toks_[pos_] : kEnd;
  }

  Tok next() {
    if (pos_ >= toks_.size()) return Tok{};
    return toks_[pos_++];
  }

  bool accept_punct(char c) {
    if (peek().kind == Tok::Punct && peek().text[0] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_punct(char c) {
    if (!accept_punct(c)) fail(std::string("expected '") + c + "'");
  }

  std::string expect_word(const char* what) {
    if (peek().kind != Tok::Word) fail(std::string("expected ") + what);
    return next().text;
  }

  std::string expect_quoted(const char* what) {
    if (peek().kind != Tok::Quoted) fail(std::string("expected quoted ") + what);
    return next().text;
  }

  void parse_part() {
    bool any = false;
    while (peek().kind == Tok::Word) {
      try {
        lex_.parts_.declare(next().text);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      any = true;
    }
    if (!any) fail("part declaration needs at least one name");
  }

  void parse_feature() {
    FeatureDecl decl;
    decl.name = expect_word("feature name");
    for (const FeatureDecl& f : lex_.features_)
      if (f.name == decl.name) fail("duplicate feature declaration: " + decl.name);
    expect_punct('=');
    decl.values.push_back(expect_word("feature value"));
    while (accept_punct('|')) decl.values.push_back(expect_word("feature value"));
    lex_.features_.push_back(std::move(decl));
  }

  void parse_entry() {
    const std::string phon = expect_quoted("phon");
    expect_punct(':');
    Cat cat = cat_expr(0);
    std::vector<std::string> tokens = split_ws(ascii_lower(phon));
    if (tokens.empty()) fail("entry phon must be nonempty");
    lex_.entries_.push_back(LexEntry{std::move(tokens), std::move(cat)});
  }

  void parse_adjunct() {
    const std::string part_name = expect_word("part name");
    const auto part = lex_.parts_.find(part_name);
    if (!part) fail("unknown part: " + part_name);
    expect_punct('{');
    ArgSpec spec = arg_spec_expr(1);
    expect_punct('}');
    lex_.adjuncts_.push_back(AdjunctRule{*part, std::move(spec)});
    adjunct_lines_.push_back(lineno_);
  }

  void parse_conj() {
    std::string token = ascii_lower(expect_quoted("conjunction token"));
    if (token.empty() || split_ws(token).size() != 1) fail("conjunction must be a single token");
    if (!lex_.parts_.find("Conj")) fail("conjunction declaration requires a declared part Conj");
    if (lex_.is_conjunction(token)) fail("duplicate conjunction declaration: " + token);
    lex_.conjunctions_.push_back(std::move(token));
  }

  Cat cat_expr(int depth) {
    const std::string part_name = expect_word("part name");
    const auto part = lex_.parts_.find(part_name);
    if (!part) fail("unknown part: " + part_name);
    FeatMap feats;
    if (accept_punct('[')) {
      do {
        const std::string fname = expect_word("feature name");
        const FeatureDecl* decl = nullptr;
        for (const FeatureDecl& f : lex_.features_)
          if (f.name == fname) decl = &f;
        if (!decl) fail("unknown feature: " + fname);
        expect_punct('=');
        const std::string value = expect_word("feature value");
        if (std::find(decl->values.begin(), decl->values.end(), value) == decl->values.end())
          fail("unknown value for feature " + fname + ": " + value);
        if (!feats.emplace(fname, value).second) fail("duplicate feature in category: " + fname);
      } while (accept_punct(','));
      expect_punct(']');
    }
    std::vector<ArgSpec> specs;
    if (peek().kind == Tok::Punct && peek().text[0] == '{') {
      if (depth >= 2) fail("nested subcat too deep (one level allowed)");
      ++pos_;
      do {
        specs.push_back(arg_spec_expr(depth + 1));
      } while (accept_punct(','));
      expect_punct('}');
      if (specs.size() > kMaxRequirementArity) fail("requirement arity exceeds 8");
    }
    return Cat{*part, std::move(feats), Requirement{std::move(specs)}};
  }

  ArgSpec arg_spec_expr(int depth) {
    std::vector<Cat> disjuncts;
    disjuncts.push_back(cat_expr(depth));
    while (accept_punct('|')) disjuncts.push_back(cat_expr(depth));
    return ArgSpec{std::move(disjuncts)};
  }

  // Static expansion: every entry gains one variant per nonempty subset of
  // the adjunct rules registered for its part, each rule applied once.
  void expand_adjuncts() {
    for (const LexEntry& entry : lex_.entries_) {
      std::vector<std::size_t> applicable;
      for (std::size_t r = 0; r < lex_.adjuncts_.size(); ++r)
        if (lex_.adjuncts_[r].part == entry.cat.part) applicable.push_back(r);
      if (applicable.empty()) continue;
      const std::size_t subsets = std::size_t{1} << applicable.size();
      for (std::size_t mask = 1; mask < subsets; ++mask) {
        LexEntry extended = entry;
        for (std::size_t b = 0; b < applicable.size(); ++b)
          if (mask & (std::size_t{1} << b))
            extended = apply_adjunct_rule(extended, lex_.adjuncts_[applicable[b]].spec);
        if (extended.cat.subcat.size() > kMaxRequirementArity) {
          lineno_ = adjunct_lines_.empty() ? 0 : adjunct_lines_.back();
          fail("adjunct expansion exceeds requirement arity 8 for entry \"" +
               entry.phon.front() + "\"");
        }
        lex_.expanded_.push_back(std::move(extended));
      }
    }
  }

  void build_conj_entries() {
    for (const std::string& tok : lex_.conjunctions_)
      lex_.conj_entries_.push_back(
          LexEntry{{tok}, Cat{lex_.parts_.at("Conj"), {}, Requirement{}}});
  }

  Lexicon lex_;
  std::vector<std::size_t> adjunct_lines_;
  std::size_t lineno_ = 0;
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

Lexicon Lexicon::load(std::istream& in) { return LexiconParser{}.parse(in); }

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  return load(in);
}

bool Lexicon::is_conjunction(std::string_view token) const {
  return std::find(conjunctions_.begin(), conjunctions_.end(), token) != conjunctions_.end();
}

std::vector<const LexEntry*> Lexicon::lookup(const std::vector<std::string>& tokens) const {
  std::vector<std::string> query = tokens;
  for (std::string& t : query) t = ascii_lower(std::move(t));
  std::vector<const LexEntry*> out;
  auto match = [&](const std::vector<LexEntry>& pool) {
    for (const LexEntry& e : pool)
      if (e.phon == query) out.push_back(&e);
  };
  match(entries_);
  match(expanded_);
  match(conj_entries_);
  return out;
}

std::string Lexicon::serialize() const {
  std::string out;
  if (!parts_.names().empty()) {
    out += "part";
    for (const std::string& n : parts_.names()) {
      out += ' ';
      out += n;
    }
    out += '\n';
  }
  for (const FeatureDecl& f : features_) {
    out += "feature " + f.name + " =";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
      out += i ? " | " : " ";
      out += f.values[i];
    }
    out += '\n';
  }
  for (const std::string& c : conjunctions_) out += "conj \"" + c + "\"\n";
  for (const AdjunctRule& a : adjuncts_)
    out += "adjunct " + a.part.name + " { " + to_string(a.spec) + " }\n";
  for (const LexEntry& e : entries_) {
    out += "entry \"";
    for (std::size_t i = 0; i < e.phon.size(); ++i) {
      if (i) out += ' ';
      out += e.phon[i];
    }
    out += "\" : " + to_string(e.cat) + '\n';
  }
  return out;
}

LexEntry apply_adjunct_rule(const LexEntry& e, const ArgSpec& spec) {
  std::vector<ArgSpec> specs = e.cat.subcat.specs();
  specs.push_back(spec);
  return LexEntry{e.phon, Cat{e.cat.part, e.cat.feats, Requirement{std::move(specs)}}};
}

std::vector<CoordSig> instantiate_coordination(const ConjunctGroup& left,
                                               const ConjunctGroup& right) {
  if (left.tuples.empty() || right.tuples.empty()) return {};
  if (left.tuples.front().arity() != right.tuples.front().arity()) return {};
  std::vector<CoordSig> out;
  for (Requirement& merged : unify_requirement(left.residual, right.residual)) {
    std::vector<Tuple> tuples = left.tuples;
    tuples.insert(tuples.end(), right.tuples.begin(), right.tuples.end());
    out.emplace_back(std::move(tuples), std::move(merged));
  }
  return out;
}

std::vector<CoordSig> instantiate_coordination(const Tuple& left, const Requirement& left_residual,
                                               const Tuple& right,
                                               const Requirement& right_residual) {
  return instantiate_coordination(ConjunctGroup{{left}, left_residual},
                                  ConjunctGroup{{right}, right_residual});
}

}  // namespace coord
