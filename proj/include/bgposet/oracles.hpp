#pragma once

// Brute-force reference routes. Each one reaches its answer by search or
// enumeration over the graph or the permutations themselves, never through
// the closed forms it is used to check.

#include "bgposet/bigrassmannian.hpp"
#include "bgposet/count.hpp"
#include "bgposet/permutation.hpp"
#include "bgposet/poset.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace bgposet::oracle {

/// Block-interchange pattern match: tries every (a, b, c).
bool is_bigrassmannian_by_pattern(const Permutation& p);

/// |{pi in BG_n : pi <= s}| by filtering with the tableau criterion.
Count downset_size(const Permutation& s);

/// |{pi in BG_n : pi >= s}| by filtering with the tableau criterion.
Count upset_size(const Permutation& s);

/// |{u in BG_n : u >= v}| by filtering with the coordinate criterion.
Count upset_size_by_vectors(const LengthVector& v);

using Relation = std::function<bool(const LengthVector&, const LengthVector&)>;

/// Strict-order covers from the transitive reduction of `leq` over `vertices`.
std::vector<std::vector<std::size_t>> transitive_reduction(
    const std::vector<LengthVector>& vertices, const Relation& leq);

/// reach[i][j] is true iff j is reachable from i along up-cover edges (i == j included).
std::vector<std::vector<bool>> reachability(const HassePoset& poset);

/// Number of up-paths from `from` to every vertex.
std::vector<Count> path_counts_from(const HassePoset& poset, std::size_t from);

/// Sum over (minimal, maximal) pairs of cover paths between them.
Count maximal_chain_count(const HassePoset& poset);

/// Undirected BFS distances from `from`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const HassePoset& poset, std::size_t from);

/// Largest antichain via minimum chain cover (bipartite matching over `leq`).
std::size_t dilworth_max_antichain(const std::vector<LengthVector>& vertices,
                                   const Relation& leq);

/// Every pair of same-level vertices against every pair at the next level.
std::vector<Butterfly> butterflies_by_search(const HassePoset& poset);

/// Maximal elements of the common down-set, by exhaustive scan.
std::vector<LengthVector> maximal_below(std::span<const LengthVector> targets);

/// Minimal elements of the common up-set, by exhaustive scan.
std::vector<LengthVector> minimal_above(std::span<const LengthVector> targets);

}  // namespace bgposet::oracle
