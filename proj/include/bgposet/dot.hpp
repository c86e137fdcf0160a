#pragma once

#include "bgposet/bigrassmannian.hpp"
#include "bgposet/poset.hpp"

#include <optional>
#include <string>

namespace bgposet {

struct DotHighlight {
  std::optional<LengthVector> downset_of;  // elements weakly below are filled
  std::optional<LengthVector> upset_of;    // elements weakly above are filled
};

/// Graphviz digraph of the cover relation, one `rank=same` group per level,
/// edges pointing upward. Output is byte-identical for identical inputs.
std::string hasse_dot(const HassePoset& poset, const DotHighlight& highlight = {});

}  // namespace bgposet
