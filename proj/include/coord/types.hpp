#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coord {

// Atomic part label. Identity and ordering are tied to the inventory that
// declared it; ordering follows declaration order.
struct PartSymbol {
  std::uint16_t index = 0;
  std::string name;

  friend bool operator==(const PartSymbol&, const PartSymbol&) = default;
};

// Declaration-ordered inventory of part symbols.
class PartInventory {
 public:
  PartInventory() = default;
  PartInventory(std::initializer_list<std::string> names);

  // Throws std::invalid_argument on duplicate names.
  PartSymbol declare(std::string name);

  std::optional<PartSymbol> find(std::string_view name) const;

  // Throws std::out_of_range for unknown names.
  PartSymbol at(std::string_view name) const;

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  friend bool operator==(const PartInventory&, const PartInventory&) = default;

 private:
  std::vector<std::string> names_;
};

// Flat feature map; an absent feature is unconstrained.
using FeatMap = std::map<std::string, std::string>;

struct Cat;

// One argument slot: a disjunction of categories. Kept sorted with exact
// duplicates removed, so equal specs compare equal structurally.
class ArgSpec {
 public:
  // Throws std::invalid_argument if the disjunction is empty.
  explicit ArgSpec(std::vector<Cat> disjuncts);

  const std::vector<Cat>& disjuncts() const { return disjuncts_; }
  std::size_t size() const { return disjuncts_.size(); }

 private:
  std::vector<Cat> disjuncts_;
};

// A head's n-requirement: a multiset of argument specifications. Kept in
// sorted canonical form; duplicates count separately.
class Requirement {
 public:
  Requirement() = default;
  explicit Requirement(std::vector<ArgSpec> specs);

  const std::vector<ArgSpec>& specs() const { return specs_; }
  std::size_t size() const { return specs_.size(); }
  bool empty() const { return specs_.empty(); }

 private:
  std::vector<ArgSpec> specs_;
};

// An atomic-part category. A Cat with an empty subcat is saturated; a
// nonempty subcat marks a functor.
struct Cat {
  PartSymbol part;
  FeatMap feats;
  Requirement subcat;

  bool saturated() const { return subcat.empty(); }
};

// Total structural order: declared-part order, then feature maps sorted by
// name, then subcat recursively. Returns <0, 0, >0.
int compare(const PartSymbol& a, const PartSymbol& b);
int compare(const Cat& a, const Cat& b);
int compare(const ArgSpec& a, const ArgSpec& b);
int compare(const Requirement& a, const Requirement& b);

inline bool operator==(const Cat& a, const Cat& b) { return compare(a, b) == 0; }
inline bool operator!=(const Cat& a, const Cat& b) { return compare(a, b) != 0; }
inline bool operator<(const Cat& a, const Cat& b) { return compare(a, b) < 0; }
inline bool operator==(const ArgSpec& a, const ArgSpec& b) { return compare(a, b) == 0; }
inline bool operator!=(const ArgSpec& a, const ArgSpec& b) { return compare(a, b) != 0; }
inline bool operator<(const ArgSpec& a, const ArgSpec& b) { return compare(a, b) < 0; }
inline bool operator==(const Requirement& a, const Requirement& b) { return compare(a, b) == 0; }
inline bool operator!=(const Requirement& a, const Requirement& b) { return compare(a, b) != 0; }
inline bool operator<(const Requirement& a, const Requirement& b) { return compare(a, b) < 0; }

// Textual forms; these double as the lexicon expression syntax, e.g.
// "PP[prep=a]", "V{NP|Compl, PP[prep=a]}", "{NP}".
std::string to_string(const Cat& c);
std::string to_string(const ArgSpec& a);
std::string to_string(const Requirement& r);

}  // namespace coord
