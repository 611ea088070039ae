#include "coord/types.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coord {

PartInventory::PartInventory(std::initializer_list<std::string> names) {
  for (const auto& n : names) declare(n);
}

PartSymbol PartInventory::declare(std::string name) {
  if (find(name)) throw std::invalid_argument("duplicate part declaration: " + name);
  names_.push_back(std::move(name));
  return PartSymbol{static_cast<std::uint16_t>(names_.size() - 1), names_.back()};
}

std::optional<PartSymbol> PartInventory::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return PartSymbol{static_cast<std::uint16_t>(i), names_[i]};
  return std::nullopt;
}

PartSymbol PartInventory::at(std::string_view name) const {
  auto p = find(name);
  if (!p) throw std::out_of_range("unknown part: " + std::string(name));
  return *p;
}

ArgSpec::ArgSpec(std::vector<Cat> disjuncts) : disjuncts_(std::move(disjuncts)) {
  if (disjuncts_.empty()) throw std::invalid_argument("argument specification must be nonempty");
  std::sort(disjuncts_.begin(), disjuncts_.end());
  disjuncts_.erase(std::unique(disjuncts_.begin(), disjuncts_.end(),
                               [](const Cat& a, const Cat& b) { return a == b; }),
                   disjuncts_.end());
}

Requirement::Requirement(std::vector<ArgSpec> specs) : specs_(std::move(specs)) {
  std::sort(specs_.begin(), specs_.end());
}

int compare(const PartSymbol& a, const PartSymbol& b) {
  if (a.index != b.index) return a.index < b.index ? -1 : 1;
  return a.name.compare(b.name);
}

namespace {

int compare_feats(const FeatMap& a, const FeatMap& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (int c = ia->first.compare(ib->first)) return c;
    if (int c = ia->second.compare(ib->second)) return c;
  }
  if (ia != a.end()) return 1;
  if (ib != b.end()) return -1;
  return 0;
}

template <typename T>
int compare_seq(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(a[i], b[i])) return c;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace

int compare(const Cat& a, const Cat& b) {
  if (int c = compare(a.part, b.part)) return c;
  if (int c = compare_feats(a.feats, b.feats)) return c;
  return compare(a.subcat, b.subcat);
}

int compare(const ArgSpec& a, const ArgSpec& b) {
  return compare_seq(a.disjuncts(), b.disjuncts());
}

int compare(const Requirement& a, const Requirement& b) {
  return compare_seq(a.specs(), b.specs());
}

std::string to_string(const Cat& c) {
  std::string out = c.part.name;
  if (!c.feats.empty()) {
    out += '[';
    bool first = true;
    for (const auto& [k, v] : c.feats) {
      if (!first) out += ',';
      first = false;
      out += k;
      out += '=';
      out += v;
    }
    out += ']';
  }
  if (!c.subcat.empty()) out += to_string(c.subcat);
  return out;
}

std::string to_string(const ArgSpec& a) {
  std::string out;
  for (std::size_t i = 0; i < a.disjuncts().size(); ++i) {
    if (i) out += '|';
    out += to_string(a.disjuncts()[i]);
  }
  return out;
}

std::string to_string(const Requirement& r) {
  std::string out = "{";
  for (std::size_t i = 0; i < r.specs().size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.specs()[i]);
  }
  out += '}';
  return out;
}

}  // namespace coord
