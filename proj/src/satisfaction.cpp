#include "coord/satisfaction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "coord/unify.hpp"

namespace coord {

Composite::Composite(std::vector<Cat> conjuncts) : conjuncts_(std::move(conjuncts)) {
  if (conjuncts_.empty()) throw std::invalid_argument("composite category must be nonempty");
}

Tuple::Tuple(std::vector<Composite> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("tuple must be nonempty");
}

CoordSig::CoordSig(std::vector<Tuple> tuples, Requirement residual)
    : tuples_(std::move(tuples)), residual_(std::move(residual)) {
  if (tuples_.empty()) throw std::invalid_argument("coordination signature must be nonempty");
  for (const Tuple& t : tuples_)
    if (t.arity() != tuples_.front().arity())
      throw std::invalid_argument("coordination signature tuples must have equal arity");
}

namespace {

template <typename T>
int compare_seq(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(a[i], b[i])) return c;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

int compare(const Composite& a, const Composite& b) {
  return compare_seq(a.conjuncts(), b.conjuncts());
}

int compare(const Tuple& a, const Tuple& b) { return compare_seq(a.elements(), b.elements()); }

int compare(const CoordSig& a, const CoordSig& b) {
  if (int c = compare_seq(a.tuples(), b.tuples())) return c;
  return compare(a.residual(), b.residual());
}

std::string to_string(const Composite& c) {
  std::string out;
  for (std::size_t i = 0; i < c.conjuncts().size(); ++i) {
    if (i) out += "∧";
    out += to_string(c.conjuncts()[i]);
  }
  return out;
}

std::string to_string(const Tuple& t) {
  std::string out = "⟨";
  for (std::size_t i = 0; i < t.elements().size(); ++i) {
    if (i) out += ',';
    out += to_string(t.elements()[i]);
  }
  out += "⟩";
  return out;
}

std::string to_string(const CoordSig& s) {
  std::string out;
  for (std::size_t i = 0; i < s.tuples().size(); ++i) {
    if (i) out += "∧";
    out += to_string(s.tuples()[i]);
  }
  out += ' ';
  out += to_string(s.residual());
  return out;
}

bool satisfies_argspec(const Composite& c, const ArgSpec& a) {
  for (const Cat& conjunct : c.conjuncts()) {
    bool matched = false;
    for (const Cat& disjunct : a.disjuncts())
      if (unify_cat(conjunct, disjunct)) {
        matched = true;
        break;
      }
    if (!matched) return false;
  }
  return true;
}

std::vector<Assignment> match_tuple(const Tuple& t, const Requirement& p) {
  std::vector<Assignment> out;
  if (t.arity() != p.size() || p.empty()) return out;
  const std::size_t n = p.size();
  Assignment perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!satisfies_argspec(t.elements()[i], p.specs()[perm[i]])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<CoordWitness> satisfies_coord(const CoordSig& s, const Requirement& p) {
  std::vector<std::vector<Assignment>> per_tuple;
  per_tuple.reserve(s.tuples().size());
  for (const Tuple& t : s.tuples()) {
    per_tuple.push_back(match_tuple(t, p));
    if (per_tuple.back().empty()) return {};
  }
  std::vector<CoordWitness> out;
  CoordWitness cur;
  cur.reserve(per_tuple.size());
  auto expand = [&](auto&& self, std::size_t k) -> void {
    if (k == per_tuple.size()) {
      out.push_back(cur);
      return;
    }
    for (const Assignment& a : per_tuple[k]) {
      cur.push_back(a);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  expand(expand, 0);
  return out;
}

std::vector<std::pair<Requirement, Requirement>> select_subrequirements(const Requirement& p,
                                                                        std::size_t m) {
  if (m == 0 || m > p.size())
    throw std::invalid_argument("sub-requirement size out of range");
  const std::size_t n = p.size();
  std::set<std::pair<Requirement, Requirement>> seen;
  std::vector<std::size_t> pick;
  auto choose = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == m) {
      std::vector<ArgSpec> sub;
      std::vector<ArgSpec> rest;
      std::size_t next = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (next < pick.size() && pick[next] == i) {
          sub.push_back(p.specs()[i]);
          ++next;
        } else {
          rest.push_back(p.specs()[i]);
        }
      }
      seen.emplace(Requirement{std::move(sub)}, Requirement{std::move(rest)});
      return;
    }
    for (std::size_t i = from; i + (m - pick.size()) <= n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  choose(choose, 0);
  return {seen.begin(), seen.end()};
}

}  // namespace coord
