#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "coord/errors.hpp"
#include "coord/satisfaction.hpp"
#include "coord/types.hpp"

namespace coord {

// A lexical entry: lowercase token sequence (multiword allowed) plus its
// category.
struct LexEntry {
  std::vector<std::string> phon;
  Cat cat;

  friend bool operator==(const LexEntry& a, const LexEntry& b) {
    return a.phon == b.phon && a.cat == b.cat;
  }
};

// An optional adjunct slot registered for heads of a given part.
struct AdjunctRule {
  PartSymbol part;
  ArgSpec spec;

  friend bool operator==(const AdjunctRule& a, const AdjunctRule& b) {
    return a.part == b.part && a.spec == b.spec;
  }
};

struct FeatureDecl {
  std::string name;
  std::vector<std::string> values;

  friend bool operator==(const FeatureDecl&, const FeatureDecl&) = default;
};

// Immutable after load. The adjunct lexical rule is applied statically at
// load time; expanded entries live alongside the originals and lookup sees
// both.
class Lexicon {
 public:
  // Parses the declarative text format; throws LexiconError with a 1-based
  // line number on any validation failure.
  static Lexicon load(std::istream& in);
  static Lexicon load_file(const std::string& path);

  // Canonical text form; reloading it yields an equal lexicon.
  std::string serialize() const;

  const PartInventory& parts() const { return parts_; }
  PartSymbol part(std::string_view name) const { return parts_.at(name); }
  const std::vector<FeatureDecl>& features() const { return features_; }
  const std::vector<LexEntry>& entries() const { return entries_; }
  const std::vector<LexEntry>& expanded_entries() const { return expanded_; }
  const std::vector<LexEntry>& conjunction_entries() const { return conj_entries_; }
  const std::vector<AdjunctRule>& adjunct_rules() const { return adjuncts_; }
  const std::vector<std::string>& conjunctions() const { return conjunctions_; }
  bool is_conjunction(std::string_view token) const;

  // All entries (original first, then expanded) whose phon equals the token
  // sequence exactly.
  std::vector<const LexEntry*> lookup(const std::vector<std::string>& tokens) const;

  std::size_t max_phon_length() const { return max_phon_length_; }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.parts_ == b.parts_ && a.features_ == b.features_ && a.entries_ == b.entries_ &&
           a.adjuncts_ == b.adjuncts_ && a.conjunctions_ == b.conjunctions_;
  }

 private:
  Lexicon() = default;
  void expand_adjuncts();

  PartInventory parts_;
  std::vector<FeatureDecl> features_;
  std::vector<LexEntry> entries_;
  std::vector<LexEntry> expanded_;
  std::vector<LexEntry> conj_entries_;
  std::vector<AdjunctRule> adjuncts_;
  std::vector<std::string> conjunctions_;
  std::size_t max_phon_length_ = 0;

  friend class LexiconParser;
};

inline Lexicon load_lexicon(std::istream& in) { return Lexicon::load(in); }

// One application of the optional adjunct rule: a copy of the entry whose
// subcat gains one occurrence of the spec.
LexEntry apply_adjunct_rule(const LexEntry& e, const ArgSpec& spec);

// A conjunct as seen by the coordination entry: one or more same-arity
// tuples (more than one when a coordination is re-associated into a larger
// one) plus the requirement inherited from the last element.
struct ConjunctGroup {
  std::vector<Tuple> tuples;
  Requirement residual;
};

// The coordination entry, closed over the tuple arity: defined iff both
// conjuncts have the same arity and their residuals unify under the
// extended unification (same valence included). Produces one signature per
// distinct unification outcome; the merged residual transfers to the
// coordinate structure by argument composition.
std::vector<CoordSig> instantiate_coordination(const ConjunctGroup& left,
                                               const ConjunctGroup& right);
std::vector<CoordSig> instantiate_coordination(const Tuple& left, const Requirement& left_residual,
                                               const Tuple& right,
                                               const Requirement& right_residual);

}  // namespace coord
