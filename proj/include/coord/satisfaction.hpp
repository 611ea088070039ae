#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coord/types.hpp"

namespace coord {

// Conjunction of categories (the composite connective). A singleton
// composite stands for its single category.
class Composite {
 public:
  // Throws std::invalid_argument if empty.
  explicit Composite(std::vector<Cat> conjuncts);

  const std::vector<Cat>& conjuncts() const { return conjuncts_; }
  std::size_t size() const { return conjuncts_.size(); }

 private:
  std::vector<Cat> conjuncts_;
};

// Ordered sequence of composites acting jointly as one conjunct. Only the
// last element may be unsaturated.
class Tuple {
 public:
  // Throws std::invalid_argument if empty.
  explicit Tuple(std::vector<Composite> elements);

  const std::vector<Composite>& elements() const { return elements_; }
  std::size_t arity() const { return elements_.size(); }

 private:
  std::vector<Composite> elements_;
};

// Conjunction of same-arity tuples plus the shared residual requirement
// inherited from the conjuncts' last elements.
class CoordSig {
 public:
  // Throws std::invalid_argument unless all tuples have equal arity.
  CoordSig(std::vector<Tuple> tuples, Requirement residual);

  const std::vector<Tuple>& tuples() const { return tuples_; }
  const Requirement& residual() const { return residual_; }
  std::size_t arity() const { return tuples_.front().arity(); }

 private:
  std::vector<Tuple> tuples_;
  Requirement residual_;
};

int compare(const Composite& a, const Composite& b);
int compare(const Tuple& a, const Tuple& b);
int compare(const CoordSig& a, const CoordSig& b);

inline bool operator==(const Composite& a, const Composite& b) { return compare(a, b) == 0; }
inline bool operator!=(const Composite& a, const Composite& b) { return compare(a, b) != 0; }
inline bool operator==(const Tuple& a, const Tuple& b) { return compare(a, b) == 0; }
inline bool operator!=(const Tuple& a, const Tuple& b) { return compare(a, b) != 0; }
inline bool operator==(const CoordSig& a, const CoordSig& b) { return compare(a, b) == 0; }
inline bool operator!=(const CoordSig& a, const CoordSig& b) { return compare(a, b) != 0; }

std::string to_string(const Composite& c);
std::string to_string(const Tuple& t);
std::string to_string(const CoordSig& s);

// Condition on one slot: every conjunct of the composite unifies with at
// least one disjunct of the specification.
bool satisfies_argspec(const Composite& c, const ArgSpec& a);

// A bijection from tuple positions to requirement slots; assignment[i] is
// the slot index realized by element i.
using Assignment = std::vector<std::size_t>;

// All bijections under which each element satisfies its assigned slot.
// Arity mismatch (a caller error; callers select a sub-multiset first)
// yields the empty list.
std::vector<Assignment> match_tuple(const Tuple& t, const Requirement& p);

// One assignment per tuple of the signature.
using CoordWitness = std::vector<Assignment>;

// All ways of choosing an assignment for every tuple; nonempty iff the
// signature satisfies the requirement.
std::vector<CoordWitness> satisfies_coord(const CoordSig& s, const Requirement& p);

// All size-m sub-multisets of p paired with their complements, deduplicated
// by multiset equality. Throws std::invalid_argument unless 0 < m <= |p|.
std::vector<std::pair<Requirement, Requirement>> select_subrequirements(const Requirement& p,
                                                                        std::size_t m);

}  // namespace coord
