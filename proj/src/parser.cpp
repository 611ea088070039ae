#include "coord/parser.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "coord/unify.hpp"

namespace coord {

std::string body_key(const Body& b) {
  if (const Cat* c = std::get_if<Cat>(&b)) return to_string(*c);
  return to_string(std::get<CoordSig>(b));
}

const Requirement& body_residual(const Body& b) {
  if (const Cat* c = std::get_if<Cat>(&b)) return c->subcat;
  return std::get<CoordSig>(b).residual();
}

Chart::Chart(std::vector<std::string> tokens, std::size_t max_edges)
    : tokens_(std::move(tokens)), max_edges_(max_edges) {
  by_start_.resize(tokens_.size() + 1);
  by_end_.resize(tokens_.size() + 1);
  conj_pos_.resize(tokens_.size(), false);
}

namespace {

std::string span_key(Span span, const Body& body) {
  return std::to_string(span.begin) + ':' + std::to_string(span.end) + ':' + body_key(body);
}

}  // namespace

std::pair<EdgeId, bool> Chart::add(Span span, Body body, Derivation derivation) {
  std::string key = span_key(span, body);
  auto it = index_.find(key);
  if (it != index_.end()) {
    Edge& e = edges_[it->second];
    if (std::find(e.derivations.begin(), e.derivations.end(), derivation) == e.derivations.end())
      e.derivations.push_back(std::move(derivation));
    return {it->second, false};
  }
  if (edges_.size() >= max_edges_)
    throw ResourceLimitError("chart edge limit exceeded (" + std::to_string(max_edges_) + ")");
  const EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{span, std::move(body), {std::move(derivation)}});
  index_.emplace(std::move(key), id);
  by_start_[span.begin].push_back(id);
  by_end_[span.end].push_back(id);
  return {id, true};
}

std::optional<EdgeId> Chart::find(Span span, const Body& body) const {
  auto it = index_.find(span_key(span, body));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::vector<EdgeId>& Chart::starting_at(std::uint32_t pos) const { return by_start_[pos]; }
const std::vector<EdgeId>& Chart::ending_at(std::uint32_t pos) const { return by_end_[pos]; }

std::string Chart::phon(Span span) const {
  std::string out;
  for (std::uint32_t i = span.begin; i < span.end; ++i) {
    if (i > span.begin) out += ' ';
    out += tokens_[i];
  }
  return out;
}

std::set<std::string> Chart::edge_keys() const {
  std::set<std::string> out;
  for (const Edge& e : edges_) out.insert(span_key(e.span, e.body));
  return out;
}

void Chart::mark_conjunction(std::uint32_t pos) { conj_pos_[pos] = true; }

bool Chart::conjunction_at(std::uint32_t pos) const {
  return pos < conj_pos_.size() && conj_pos_[pos];
}

std::vector<std::uint32_t> Chart::conjunction_positions() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 0; p < conj_pos_.size(); ++p)
    if (conj_pos_[p]) out.push_back(p);
  return out;
}

Chart lex_scan(const std::vector<std::string>& tokens, const Lexicon& lex,
               std::size_t max_edges) {
  if (tokens.empty()) throw std::invalid_argument("lex_scan requires a nonempty token sequence");
  Chart chart(tokens, max_edges);
  const std::size_t n = tokens.size();
  std::vector<bool> covered(n, false);
  const std::size_t max_len = std::min(lex.max_phon_length(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t len = max_len; len >= 1; --len) {
      if (i + len > n) continue;
      const std::vector<std::string> slice(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                           tokens.begin() + static_cast<std::ptrdiff_t>(i + len));
      for (const LexEntry* e : lex.lookup(slice)) {
        chart.add({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + len)}, e->cat,
                  Derivation{"lex", {}});
        std::fill(covered.begin() + static_cast<std::ptrdiff_t>(i),
                  covered.begin() + static_cast<std::ptrdiff_t>(i + len), true);
      }
    }
    if (lex.is_conjunction(tokens[i])) chart.mark_conjunction(static_cast<std::uint32_t>(i));
  }
  std::vector<std::string> unknown;
  for (std::size_t i = 0; i < n; ++i)
    if (!covered[i]) unknown.push_back(tokens[i]);
  if (!unknown.empty()) throw UnknownTokenError(std::move(unknown));
  return chart;
}

namespace {

// Conjunction tokens are not constituents; keep their edges out of tuples.
bool excluded_from_runs(const Chart& chart, const Edge& e) {
  return !e.is_coord() && e.span.end == e.span.begin + 1 && chart.conjunction_at(e.span.begin);
}

// The composite an edge contributes as one tuple element. A coordination
// contributes the conjunction of its constituents only when all its tuples
// are single constituents.
std::optional<Composite> element_composite(const Edge& e) {
  if (const Cat* c = e.cat()) return Composite{{*c}};
  const CoordSig& sig = *e.sig();
  std::vector<Cat> cats;
  for (const Tuple& t : sig.tuples()) {
    if (t.arity() != 1) return std::nullopt;
    const auto& conj = t.elements().front().conjuncts();
    cats.insert(cats.end(), conj.begin(), conj.end());
  }
  return Composite{std::move(cats)};
}

std::optional<TupleCandidate> make_candidate(const Chart& chart,
                                             const std::vector<EdgeId>& run) {
  if (run.size() == 1) {
    const Edge& e = chart.at(run.front());
    if (excluded_from_runs(chart, e)) return std::nullopt;
    if (e.is_coord())  // re-association: nested coordination flattens
      return TupleCandidate{run, e.sig()->tuples(), e.sig()->residual()};
    return TupleCandidate{run, {Tuple{{Composite{{*e.cat()}}}}}, e.cat()->subcat};
  }
  std::vector<Composite> elements;
  elements.reserve(run.size());
  for (std::size_t i = 0; i < run.size(); ++i) {
    const Edge& e = chart.at(run[i]);
    if (excluded_from_runs(chart, e)) return std::nullopt;
    auto comp = element_composite(e);
    if (!comp) return std::nullopt;
    if (i + 1 < run.size() && !e.residual().empty()) return std::nullopt;
    elements.push_back(std::move(*comp));
  }
  return TupleCandidate{run, {Tuple{std::move(elements)}},
                        chart.at(run.back()).residual()};
}

void runs_ending_at(const Chart& chart, std::uint32_t pos, std::size_t max_tuple,
                    std::vector<std::vector<EdgeId>>& out) {
  // Suffix-first: the final element ends at pos, prefixes must be saturated.
  std::vector<EdgeId> path;
  auto grow = [&](auto&& self, std::uint32_t begin) -> void {
    out.emplace_back(path.rbegin(), path.rend());
    if (path.size() >= max_tuple) return;
    for (EdgeId f : chart.ending_at(begin)) {
      const Edge& e = chart.at(f);
      if (excluded_from_runs(chart, e) || !e.residual().empty()) continue;
      path.push_back(f);
      self(self, e.span.begin);
      path.pop_back();
    }
  };
  for (EdgeId last : chart.ending_at(pos)) {
    const Edge& e = chart.at(last);
    if (excluded_from_runs(chart, e)) continue;
    path.push_back(last);
    grow(grow, e.span.begin);
    path.pop_back();
  }
}

void runs_starting_at(const Chart& chart, std::uint32_t pos, std::size_t max_tuple,
                      std::vector<std::vector<EdgeId>>& out) {
  std::vector<EdgeId> path;
  auto grow = [&](auto&& self, std::uint32_t next) -> void {
    out.push_back(path);
    if (path.size() >= max_tuple) return;
    if (!chart.at(path.back()).residual().empty()) return;  // would become non-final
    for (EdgeId f : chart.starting_at(next)) {
      const Edge& e = chart.at(f);
      if (excluded_from_runs(chart, e)) continue;
      path.push_back(f);
      self(self, e.span.end);
      path.pop_back();
    }
  };
  for (EdgeId first : chart.starting_at(pos)) {
    const Edge& e = chart.at(first);
    if (excluded_from_runs(chart, e)) continue;
    path.push_back(first);
    grow(grow, e.span.end);
    path.pop_back();
  }
}

}  // namespace

std::vector<TupleCandidate> build_tuples(const Chart& chart, std::size_t max_tuple,
                                         std::optional<std::uint32_t> ends_at,
                                         std::optional<std::uint32_t> starts_at) {
  if (max_tuple == 0) throw std::invalid_argument("max_tuple must be at least 1");
  std::vector<std::vector<EdgeId>> runs;
  if (ends_at)
    runs_ending_at(chart, *ends_at, max_tuple, runs);
  else if (starts_at)
    runs_starting_at(chart, *starts_at, max_tuple, runs);
  else
    for (std::uint32_t p = 1; p <= chart.positions(); ++p)
      runs_ending_at(chart, p, max_tuple, runs);
  std::vector<TupleCandidate> out;
  for (const auto& run : runs)
    if (auto cand = make_candidate(chart, run)) out.push_back(std::move(*cand));
  return out;
}

namespace {

std::vector<Edge> coordinate_at(const Chart& chart, const Lexicon& lex, std::uint32_t p,
                                std::size_t max_tuple) {
  std::vector<Edge> out;
  const auto lefts = build_tuples(chart, max_tuple, p, std::nullopt);
  if (lefts.empty()) return out;
  const auto rights = build_tuples(chart, max_tuple, std::nullopt, p + 1);
  std::optional<EdgeId> conj_edge;
  if (lex.parts().find("Conj"))
    conj_edge = chart.find({p, p + 1}, Cat{lex.part("Conj"), {}, Requirement{}});
  for (const TupleCandidate& l : lefts) {
    for (const TupleCandidate& r : rights) {
      auto sigs = instantiate_coordination(ConjunctGroup{l.tuples, l.residual},
                                           ConjunctGroup{r.tuples, r.residual});
      if (sigs.empty()) continue;
      std::vector<EdgeId> children = l.elements;
      if (conj_edge) children.push_back(*conj_edge);
      children.insert(children.end(), r.elements.begin(), r.elements.end());
      const Span span{chart.at(l.elements.front()).span.begin,
                      chart.at(r.elements.back()).span.end};
      for (CoordSig& sig : sigs)
        out.push_back(Edge{span, std::move(sig), {Derivation{"coord", children}}});
    }
  }
  return out;
}

}  // namespace

std::vector<Edge> coordinate(const Chart& chart, const Lexicon& lex, std::size_t max_tuple) {
  std::vector<Edge> out;
  for (std::uint32_t p : chart.conjunction_positions())
    for (Edge& e : coordinate_at(chart, lex, p, max_tuple)) out.push_back(std::move(e));
  return out;
}

namespace {

// One application of the saturation schema: the head spends a sub-multiset
// of its requirement on a single complement batch (a plain constituent or a
// coordination). The unselected remainder and the complement's inherited
// residual cannot both be nonempty.
std::vector<Edge> saturate_step(const Edge& head, EdgeId head_id, const Edge& comp,
                                EdgeId comp_id) {
  std::vector<Edge> out;
  if (head.span.end != comp.span.begin) return out;
  const Requirement& req = head.residual();
  if (req.empty()) return out;
  const Span span{head.span.begin, comp.span.end};
  auto emit = [&](const Requirement& remainder, const Requirement& inherited) {
    const Requirement* next = nullptr;
    if (inherited.empty())
      next = &remainder;
    else if (remainder.empty())
      next = &inherited;
    else
      return;  // partial saturation with an unsaturated complement
    Body body = head.is_coord()
                    ? Body{CoordSig{head.sig()->tuples(), *next}}
                    : Body{Cat{head.cat()->part, head.cat()->feats, *next}};
    for (const Edge& seen : out)
      if (seen.body == body) return;
    out.push_back(Edge{span, std::move(body), {Derivation{"head_comp", {head_id, comp_id}}}});
  };
  if (const Cat* c = comp.cat()) {
    const Composite singleton{{*c}};
    for (const auto& [sub, rem] : select_subrequirements(req, 1))
      if (satisfies_argspec(singleton, sub.specs().front())) emit(rem, c->subcat);
  } else {
    const CoordSig& sig = *comp.sig();
    const std::size_t m = sig.arity();
    if (m > req.size()) return out;
    for (const auto& [sub, rem] : select_subrequirements(req, m))
      if (!satisfies_coord(sig, sub).empty()) emit(rem, sig.residual());
  }
  return out;
}

bool body_equal(const Body& a, const Body& b) {
  if (a.index() != b.index()) return false;
  if (const Cat* c = std::get_if<Cat>(&a)) return *c == std::get<Cat>(b);
  return std::get<CoordSig>(a) == std::get<CoordSig>(b);
}

}  // namespace

std::vector<Edge> combine_head_complements(const Chart& chart, EdgeId head,
                                           const std::vector<EdgeId>& comps) {
  if (comps.empty()) return {};
  std::vector<Edge> frontier{chart.at(head)};
  for (EdgeId cid : comps) {
    std::vector<Edge> next;
    for (const Edge& h : frontier)
      for (Edge& e : saturate_step(h, head, chart.at(cid), cid)) {
        bool dup = false;
        for (const Edge& seen : next)
          if (body_equal(seen.body, e.body)) dup = true;
        if (!dup) next.push_back(std::move(e));
      }
    frontier = std::move(next);
    if (frontier.empty()) return {};
  }
  std::vector<EdgeId> children{head};
  children.insert(children.end(), comps.begin(), comps.end());
  for (Edge& e : frontier) e.derivations = {Derivation{"head_comp", children}};
  return frontier;
}

bool matches_root(const Edge& e, std::string_view part_name) {
  if (const Cat* c = e.cat()) return c->part.name == part_name && c->saturated();
  const CoordSig& sig = *e.sig();
  if (!sig.residual().empty()) return false;
  for (const Tuple& t : sig.tuples()) {
    if (t.arity() != 1) return false;
    for (const Cat& c : t.elements().front().conjuncts())
      if (c.part.name != part_name) return false;
  }
  return true;
}

std::optional<Edge> subject_attach(const Chart& chart, EdgeId np, EdgeId vp,
                                   const Lexicon& lex) {
  const Edge& n = chart.at(np);
  const Edge& v = chart.at(vp);
  if (n.span.end != v.span.begin) return std::nullopt;
  const Cat* nc = n.cat();
  if (!nc || nc->part.name != "NP" || !nc->saturated()) return std::nullopt;
  if (!matches_root(v, "V")) return std::nullopt;
  const auto s = lex.parts().find("S");
  if (!s) return std::nullopt;
  return Edge{{n.span.begin, v.span.end},
              Cat{*s, {}, Requirement{}},
              {Derivation{"subject", {np, vp}}}};
}

ParseForest parse(const std::vector<std::string>& tokens, const Lexicon& lex,
                  const ParseConfig& config) {
  if (config.max_tuple == 0) throw std::invalid_argument("max_tuple must be at least 1");
  Chart chart = lex_scan(tokens, lex, config.max_edges);
  const auto conj_positions = chart.conjunction_positions();

  std::deque<EdgeId> pending;
  for (EdgeId id = 0; id < chart.size(); ++id) pending.push_back(id);
  std::optional<std::mt19937_64> rng;
  if (config.agenda_seed) rng.emplace(*config.agenda_seed);

  auto enqueue_new = [&](std::size_t before) {
    for (EdgeId id = static_cast<EdgeId>(before); id < chart.size(); ++id) pending.push_back(id);
  };
  auto add_all = [&](const std::vector<Edge>& edges) {
    const std::size_t before = chart.size();
    for (const Edge& e : edges)
      for (const Derivation& d : e.derivations) chart.add(e.span, e.body, d);
    enqueue_new(before);
  };

  while (!pending.empty()) {
    std::size_t pick = 0;
    if (rng) pick = static_cast<std::size_t>((*rng)() % pending.size());
    const EdgeId id = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    const Edge e = chart.at(id);  // copy: chart may grow below

    // subject rule
    {
      const std::size_t before = chart.size();
      for (EdgeId vp : std::vector<EdgeId>(chart.starting_at(e.span.end)))
        if (auto s = subject_attach(chart, id, vp, lex))
          chart.add(s->span, s->body, s->derivations.front());
      for (EdgeId np : std::vector<EdgeId>(chart.ending_at(e.span.begin)))
        if (auto s = subject_attach(chart, np, id, lex))
          chart.add(s->span, s->body, s->derivations.front());
      enqueue_new(before);
    }

    // head saturation, edge as head then as complement
    if (!e.residual().empty())
      for (EdgeId c : std::vector<EdgeId>(chart.starting_at(e.span.end)))
        add_all(saturate_step(e, id, chart.at(c), c));
    for (EdgeId h : std::vector<EdgeId>(chart.ending_at(e.span.begin))) {
      const Edge& head = chart.at(h);  // not used past the add_all mutation
      if (!head.residual().empty()) add_all(saturate_step(head, h, e, id));
    }

    // coordination around any conjunction the edge could flank
    for (std::uint32_t p : conj_positions)
      if (e.span.end <= p || e.span.begin > p) add_all(coordinate_at(chart, lex, p, config.max_tuple));
  }

  ParseForest forest{std::move(chart), {}};
  const Span full{0, forest.chart.positions()};
  for (EdgeId id = 0; id < forest.chart.size(); ++id) {
    const Edge& e = forest.chart.at(id);
    if (e.span == full && matches_root(e, config.root_part)) forest.roots.push_back(id);
  }
  std::sort(forest.roots.begin(), forest.roots.end(), [&](EdgeId a, EdgeId b) {
    return body_key(forest.chart.at(a).body) < body_key(forest.chart.at(b).body);
  });
  return forest;
}

}  // namespace coord
