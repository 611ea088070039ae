#pragma once

#include <string>
#include <vector>

#include "coord/parser.hpp"

namespace coord {

// Display label for a node: the part (with features) of a plain category,
// or the joined conjunct parts of a coordination.
std::string node_label(const Body& b);

// One node per line, children indented two spaces, child order = span
// order. Each node shows label, residual requirement and covered phon.
// Renders the first derivation of each packed node.
std::string render_tree(const Chart& chart, EdgeId root);

// All derivation trees of the packed node, capped.
std::vector<std::string> render_trees(const Chart& chart, EdgeId root, std::size_t cap);

}  // namespace coord
