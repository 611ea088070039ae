#include "coord/render.hpp"

#include <algorithm>
#include <map>

namespace coord {

namespace {

std::string composite_label(const Composite& c, bool wrap) {
  std::string out;
  for (std::size_t i = 0; i < c.conjuncts().size(); ++i) {
    if (i) out += "∧";
    out += c.conjuncts()[i].part.name;
  }
  if (wrap && c.size() > 1) out = "(" + out + ")";
  return out;
}

// Content-determined sort key so the chosen first derivation is stable
// across runs regardless of edge insertion order.
std::string derivation_key(const Chart& chart, const Derivation& d) {
  std::string key = d.rule;
  for (EdgeId c : d.children) {
    const Edge& e = chart.at(c);
    key += '|' + std::to_string(e.span.begin) + ':' + std::to_string(e.span.end) + ':' +
           body_key(e.body);
  }
  return key;
}

const Derivation& first_derivation(const Chart& chart, const Edge& e) {
  const Derivation* best = &e.derivations.front();
  std::string best_key = derivation_key(chart, *best);
  for (std::size_t i = 1; i < e.derivations.size(); ++i) {
    std::string k = derivation_key(chart, e.derivations[i]);
    if (k < best_key) {
      best = &e.derivations[i];
      best_key = std::move(k);
    }
  }
  return *best;
}

std::string node_line(const Chart& chart, const Edge& e, std::size_t depth) {
  std::string line(depth * 2, ' ');
  line += node_label(e.body);
  line += ' ';
  line += to_string(e.residual());
  line += " \"";
  line += chart.phon(e.span);
  line += '"';
  return line;
}

void render_first(const Chart& chart, EdgeId id, std::size_t depth, std::string& out) {
  const Edge& e = chart.at(id);
  out += node_line(chart, e, depth);
  out += '\n';
  const Derivation& d = first_derivation(chart, e);
  for (EdgeId c : d.children) render_first(chart, c, depth + 1, out);
}

struct TreeEnumerator {
  const Chart& chart;
  std::size_t cap;
  std::map<EdgeId, std::vector<std::string>> memo;

  const std::vector<std::string>& trees(EdgeId id) {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    const Edge& e = chart.at(id);
    std::vector<const Derivation*> derivs;
    for (const Derivation& d : e.derivations) derivs.push_back(&d);
    std::sort(derivs.begin(), derivs.end(), [&](const Derivation* a, const Derivation* b) {
      return derivation_key(chart, *a) < derivation_key(chart, *b);
    });
    std::vector<std::string> out;
    for (const Derivation* d : derivs) {
      std::vector<std::string> partial{""};
      for (EdgeId c : d->children) {
        std::vector<std::string> next;
        for (const std::string& prefix : partial) {
          for (const std::string& sub : trees(c)) {
            std::string indented;
            std::size_t start = 0;
            while (start < sub.size()) {
              std::size_t nl = sub.find('\n', start);
              if (nl == std::string::npos) nl = sub.size();
              indented += "  " + sub.substr(start, nl - start) + '\n';
              start = nl + 1;
            }
            next.push_back(prefix + indented);
            if (next.size() >= cap) break;
          }
          if (next.size() >= cap) break;
        }
        partial = std::move(next);
      }
      for (std::string& p : partial) {
        out.push_back(node_line(chart, e, 0) + '\n' + p);
        if (out.size() >= cap) break;
      }
      if (out.size() >= cap) break;
    }
    return memo.emplace(id, std::move(out)).first->second;
  }
};

}  // namespace

std::string node_label(const Body& b) {
  if (const Cat* c = std::get_if<Cat>(&b)) {
    std::string label = c->part.name;
    if (!c->feats.empty()) {
      label += '[';
      bool first = true;
      for (const auto& [k, v] : c->feats) {
        if (!first) label += ',';
        first = false;
        label += k;
        label += '=';
        label += v;
      }
      label += ']';
    }
    return label;
  }
  const CoordSig& sig = std::get<CoordSig>(b);
  std::string label;
  for (std::size_t i = 0; i < sig.tuples().size(); ++i) {
    if (i) label += "∧";
    const Tuple& t = sig.tuples()[i];
    if (t.arity() == 1) {
      label += composite_label(t.elements().front(), false);
    } else {
      label += "⟨";
      for (std::size_t j = 0; j < t.elements().size(); ++j) {
        if (j) label += ',';
        label += composite_label(t.elements()[j], true);
      }
      label += "⟩";
    }
  }
  return label;
}

std::string render_tree(const Chart& chart, EdgeId root) {
  std::string out;
  render_first(chart, root, 0, out);
  return out;
}

std::vector<std::string> render_trees(const Chart& chart, EdgeId root, std::size_t cap) {
  if (cap == 0) return {};
  TreeEnumerator e{chart, cap, {}};
  return e.trees(root);
}

}  // namespace coord
