#pragma once

#include <optional>
#include <vector>

#include "coord/types.hpp"

namespace coord {

// Hard cap on requirement arity; the permutation search below is exhaustive.
inline constexpr std::size_t kMaxRequirementArity = 8;

// Base unification of two categories. Defined iff the parts are identical,
// the feature maps are conflict-free and the subcats are compatible under
// the extended unification. The nested subcat is canonicalized to the result
// of the lexicographically first successful permutation so that the
// operation is a function; the full permutation ambiguity is surfaced by
// unify_requirement instead. Absence signals unification failure.
std::optional<Cat> unify_cat(const Cat& s, const Cat& t);

// True iff every constraint of s is entailed by t.
bool subsumes(const Cat& s, const Cat& t);
bool argspec_subsumes(const ArgSpec& a, const ArgSpec& b);
bool requirement_subsumes(const Requirement& p, const Requirement& q);

// Unification of two argument specifications: the pairwise disjunct
// unifications that exist; absent iff no pair unifies.
std::optional<ArgSpec> unify_argspec(const ArgSpec& a, const ArgSpec& b);

// Extended unification of two n-requirements: one result per successful
// permutation, deduplicated by multiset equality. Empty result signals
// incompatibility; this includes any valence mismatch. Two empty
// requirements yield the singleton {empty requirement}.
std::vector<Requirement> unify_requirement(const Requirement& p, const Requirement& q);

// True iff the extended unification of p and q succeeds.
bool compatible(const Requirement& p, const Requirement& q);

}  // namespace coord
