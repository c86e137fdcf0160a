#include "bgposet/dot.hpp"

#include <sstream>

namespace bgposet {

namespace {

std::string node_id(const LengthVector& v) {
  const auto& c = v.coords();
  return "\"" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
         "," + std::to_string(c[3]) + "\"";
}

std::string label(const LengthVector& v) {
  std::string vec = v.to_string();
  vec = vec.substr(0, vec.find('@'));
  if (v.order() <= 9) return format_permutation(from_length_vector(v)) + "\\n" + vec;
  return vec;
}

}  // namespace

std::string hasse_dot(const HassePoset& poset, const DotHighlight& highlight) {
  std::ostringstream out;
  out << "digraph BG" << poset.order() << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box, fontname=\"Helvetica\", fontsize=10];\n";

  for (const auto& v : poset.vertices()) {
    const bool down = highlight.downset_of && bg_leq(v, *highlight.downset_of);
    const bool up = highlight.upset_of && bg_leq(*highlight.upset_of, v);
    out << "  " << node_id(v) << " [label=\"" << label(v) << "\"";
    if (down && up) {
      out << ", style=filled, fillcolor=\"#b8e186\"";
    } else if (down) {
      out << ", style=filled, fillcolor=\"#9ecae1\"";
    } else if (up) {
      out << ", style=filled, fillcolor=\"#fcae91\"";
    }
    if ((highlight.downset_of && v == *highlight.downset_of) ||
        (highlight.upset_of && v == *highlight.upset_of))
      out << ", penwidth=2";
    out << "];\n";
  }

  for (int k = 0; k <= poset.max_rank(); ++k) {
    out << "  { rank=same;";
    for (std::size_t i : poset.level(k)) out << ' ' << node_id(poset.vertex(i)) << ';';
    out << " }\n";
  }

  for (std::size_t i = 0; i < poset.size(); ++i)
    for (std::size_t j : poset.up(i))
      out << "  " << node_id(poset.vertex(i)) << " -> " << node_id(poset.vertex(j)) << ";\n";

  out << "}\n";
  return out.str();
}

}  // namespace bgposet
