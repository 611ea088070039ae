#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "coord/lexicon.hpp"

namespace coord {

using EdgeId = std::uint32_t;

// Half-open token interval.
struct Span {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  friend auto operator<=>(const Span&, const Span&) = default;
};

// A chart constituent is either a plain category or a coordination
// signature.
using Body = std::variant<Cat, CoordSig>;

// Canonical text for a body; used for chart deduplication and for
// cross-run comparisons of chart contents.
std::string body_key(const Body& b);

// The live requirement of a body: the subcat of a plain category, the
// shared residual of a coordination.
const Requirement& body_residual(const Body& b);

struct Derivation {
  std::string rule;                // "lex", "head_comp", "coord", "subject"
  std::vector<EdgeId> children;    // span order

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct Edge {
  Span span;
  Body body;
  std::vector<Derivation> derivations;

  bool is_coord() const { return std::holds_alternative<CoordSig>(body); }
  const Cat* cat() const { return std::get_if<Cat>(&body); }
  const CoordSig* sig() const { return std::get_if<CoordSig>(&body); }
  const Requirement& residual() const { return body_residual(body); }
};

// Packed chart: one edge per (span, body), derivations accumulated.
class Chart {
 public:
  Chart(std::vector<std::string> tokens, std::size_t max_edges);

  // Returns the edge id and whether a new edge was created; an existing
  // (span, body) pair only accumulates the derivation. Throws
  // ResourceLimitError past the edge cap.
  std::pair<EdgeId, bool> add(Span span, Body body, Derivation derivation);

  const Edge& at(EdgeId id) const { return edges_[id]; }
  std::size_t size() const { return edges_.size(); }
  std::optional<EdgeId> find(Span span, const Body& body) const;

  const std::vector<EdgeId>& starting_at(std::uint32_t pos) const;
  const std::vector<EdgeId>& ending_at(std::uint32_t pos) const;

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::uint32_t positions() const { return static_cast<std::uint32_t>(tokens_.size()); }
  std::string phon(Span span) const;

  // Conjunction token positions, recorded by lex_scan.
  void mark_conjunction(std::uint32_t pos);
  bool conjunction_at(std::uint32_t pos) const;
  std::vector<std::uint32_t> conjunction_positions() const;

  // Order-independent fingerprint of the chart contents.
  std::set<std::string> edge_keys() const;

 private:
  std::vector<std::string> tokens_;
  std::size_t max_edges_;
  std::vector<Edge> edges_;
  std::map<std::string, EdgeId> index_;
  std::vector<std::vector<EdgeId>> by_start_;
  std::vector<std::vector<EdgeId>> by_end_;
  std::vector<bool> conj_pos_;
};

struct ParseConfig {
  std::string root_part = "S";
  std::size_t max_tuple = 3;
  std::size_t max_edges = 100000;
  // When set, the agenda is drained in pseudo-random order; the final chart
  // must not depend on it.
  std::optional<std::uint64_t> agenda_seed;
};

// Seeds a chart with one edge per matching lexical entry; all match lengths
// are kept. Throws std::invalid_argument on empty input and
// UnknownTokenError when some token is covered by no entry at any length.
Chart lex_scan(const std::vector<std::string>& tokens, const Lexicon& lex,
               std::size_t max_edges = 100000);

// Head-saturation schemata. The head (a functor edge: plain or coordinate)
// is applied to the adjacent complement sequence left to right; each step
// selects a sub-multiset of the current requirement, matches one
// complement and leaves either the unselected remainder or the
// complement's residual, never both. Returned edges are not added to any
// chart.
std::vector<Edge> combine_head_complements(const Chart& chart, EdgeId head,
                                           const std::vector<EdgeId>& comps);

// A latent conjunct: adjacent edges read as a tuple, or a re-associated
// coordination edge.
struct TupleCandidate {
  std::vector<EdgeId> elements;
  std::vector<Tuple> tuples;
  Requirement residual;
};

// Enumerates conjunct candidates of 1..max_tuple adjacent edges where all
// but possibly the last are saturated. Candidates are latent: they only
// feed coordination, never the chart. Optional bounds restrict to runs
// ending (left conjuncts) or starting (right conjuncts) at a position.
std::vector<TupleCandidate> build_tuples(const Chart& chart, std::size_t max_tuple,
                                         std::optional<std::uint32_t> ends_at = std::nullopt,
                                         std::optional<std::uint32_t> starts_at = std::nullopt);

// For every conjunction token: coordinate every left conjunct candidate
// ending just before it with every right candidate starting just after it.
std::vector<Edge> coordinate(const Chart& chart, const Lexicon& lex, std::size_t max_tuple = 3);

// Subject rule: saturated NP immediately preceding a saturated verbal edge
// yields an S.
std::optional<Edge> subject_attach(const Chart& chart, EdgeId np, EdgeId vp, const Lexicon& lex);

// True for a saturated plain edge of the given part, or a saturated
// coordination of single such constituents.
bool matches_root(const Edge& e, std::string_view part_name);

struct ParseForest {
  Chart chart;
  std::vector<EdgeId> roots;
};

// Exhaustive closure of the chart under lexical scan, tuple formation,
// coordination, head saturation and the subject rule.
ParseForest parse(const std::vector<std::string>& tokens, const Lexicon& lex,
                  const ParseConfig& config = {});

}  // namespace coord
