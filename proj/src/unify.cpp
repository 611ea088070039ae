#include "coord/unify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coord {

namespace {

std::optional<FeatMap> merge_feats(const FeatMap& a, const FeatMap& b) {
  FeatMap out = a;
  for (const auto& [k, v] : b) {
    auto [it, inserted] = out.emplace(k, v);
    if (!inserted && it->second != v) return std::nullopt;
  }
  return out;
}

// Walks permutation outcomes of p against q in lexicographic index order.
// The callback returns false to stop early. Requirements are held in sorted
// canonical form, so the enumeration order is deterministic.
template <typename Fn>
void each_permutation_outcome(const Requirement& p, const Requirement& q, Fn&& fn) {
  if (p.size() != q.size()) return;
  const std::size_t n = p.size();
  if (n == 0) {
    fn(Requirement{});
    return;
  }
  if (n > kMaxRequirementArity)
    throw std::invalid_argument("requirement arity exceeds supported maximum");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<ArgSpec> merged;
    merged.reserve(n);
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      auto u = unify_argspec(p.specs()[i], q.specs()[perm[i]]);
      if (!u) {
        ok = false;
        break;
      }
      merged.push_back(std::move(*u));
    }
    if (ok && !fn(Requirement{std::move(merged)})) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::optional<Requirement> unify_requirement_first(const Requirement& p, const Requirement& q) {
  std::optional<Requirement> out;
  each_permutation_outcome(p, q, [&](Requirement r) {
    out = std::move(r);
    return false;
  });
  return out;
}

}  // namespace

std::optional<Cat> unify_cat(const Cat& s, const Cat& t) {
  if (s.part != t.part) return std::nullopt;
  auto feats = merge_feats(s.feats, t.feats);
  if (!feats) return std::nullopt;
  auto sub = unify_requirement_first(s.subcat, t.subcat);
  if (!sub) return std::nullopt;
  return Cat{s.part, std::move(*feats), std::move(*sub)};
}

std::optional<ArgSpec> unify_argspec(const ArgSpec& a, const ArgSpec& b) {
  std::vector<Cat> merged;
  for (const Cat& s : a.disjuncts())
    for (const Cat& t : b.disjuncts())
      if (auto u = unify_cat(s, t)) merged.push_back(std::move(*u));
  if (merged.empty()) return std::nullopt;
  return ArgSpec{std::move(merged)};
}

std::vector<Requirement> unify_requirement(const Requirement& p, const Requirement& q) {
  std::set<Requirement> seen;
  each_permutation_outcome(p, q, [&](Requirement r) {
    seen.insert(std::move(r));
    return true;
  });
  return {seen.begin(), seen.end()};
}

bool compatible(const Requirement& p, const Requirement& q) {
  bool any = false;
  each_permutation_outcome(p, q, [&](const Requirement&) {
    any = true;
    return false;
  });
  return any;
}

bool subsumes(const Cat& s, const Cat& t) {
  if (s.part != t.part) return false;
  for (const auto& [k, v] : s.feats) {
    auto it = t.feats.find(k);
    if (it == t.feats.end() || it->second != v) return false;
  }
  return requirement_subsumes(s.subcat, t.subcat);
}

bool argspec_subsumes(const ArgSpec& a, const ArgSpec& b) {
  // Every alternative left open by b is covered by some alternative of a.
  for (const Cat& d : b.disjuncts()) {
    bool covered = false;
    for (const Cat& c : a.disjuncts())
      if (subsumes(c, d)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

bool requirement_subsumes(const Requirement& p, const Requirement& q) {
  if (p.size() != q.size()) return false;
  const std::size_t n = p.size();
  if (n == 0) return true;
  if (n > kMaxRequirementArity)
    throw std::invalid_argument("requirement arity exceeds supported maximum");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!argspec_subsumes(p.specs()[i], q.specs()[perm[i]])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace coord
