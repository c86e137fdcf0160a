#pragma once

#include "bgposet/bigrassmannian.hpp"
#include "bgposet/count.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bgposet {

/// Elements covering v: move one unit from l1 or l4 onto l2 or l3. Sorted.
std::vector<LengthVector> up_covers(const LengthVector& v);

/// Elements covered by v: move one unit from l2 or l3 onto l1 or l4. Sorted.
std::vector<LengthVector> down_covers(const LengthVector& v);

/// Cover digraph of the bigrassmannian poset of order n. Vertices are sorted
/// lexicographically; adjacency lists are sorted too. Immutable once built.
class HassePoset {
 public:
  /// Requires 2 <= n <= kMaxOrder.
  static HassePoset build(int n);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<LengthVector>& vertices() const noexcept { return vertices_; }
  const LengthVector& vertex(std::size_t i) const { return vertices_.at(i); }

  /// Index of v in vertices(); throws OrderMismatch for a foreign order.
  std::size_t index_of(const LengthVector& v) const;

  /// Vertex indices covering / covered by vertex i, ascending.
  const std::vector<std::size_t>& up(std::size_t i) const { return up_.at(i); }
  const std::vector<std::size_t>& down(std::size_t i) const { return down_.at(i); }

  int rank(std::size_t i) const { return vertices_.at(i).rank(); }
  int max_rank() const noexcept { return n_ - 2; }
  std::size_t edge_count() const noexcept { return edges_; }

  /// Vertex indices at level k, ascending.
  std::vector<std::size_t> level(int k) const;

 private:
  HassePoset() = default;

  int n_ = 0;
  std::vector<LengthVector> vertices_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
  std::size_t edges_ = 0;
};

int up_degree(const LengthVector& v);
int down_degree(const LengthVector& v);

/// Undirected Hasse degree; OrderTooSmall when n <= 2.
Count degree(const LengthVector& v);

Count bg_count(int n);
Count edge_count(int n);
std::vector<LengthVector> minimal_elements(int n);
std::vector<LengthVector> maximal_elements(int n);

/// Number of elements at level k, 0 <= k <= n-2.
Count level_size(int n, int k);

/// Saturated chains from u up to v; NotComparable unless u <= v.
Count count_saturated_chains(const LengthVector& u, const LengthVector& v);

Count count_maximal_chains(int n);

Count hasse_distance(const LengthVector& u, const LengthVector& v);

/// Level (0-based) where the symmetric chain paths meet: ceil(n/2) - 1.
int middle_level(int n);

/// Image of v under the level-to-level injection used for the chain
/// partition: one level up below the middle, one level down above it, and
/// nullopt on the middle level itself.
std::optional<LengthVector> sperner_step(const LengthVector& v);

/// Vertex-disjoint saturated paths covering the poset, each listed bottom-up
/// and each passing through the middle level. Sorted by first element.
std::vector<std::vector<LengthVector>> sperner_decomposition(int n);

Count max_antichain_size(int n);

/// Two same-level elements both covered by the same two elements of the next
/// level. Pairs are stored sorted.
struct Butterfly {
  std::array<LengthVector, 2> lower;
  std::array<LengthVector, 2> upper;

  friend bool operator==(const Butterfly&, const Butterfly&) = default;
  friend auto operator<=>(const Butterfly&, const Butterfly&) = default;
};

/// All butterflies of the Hasse diagram, sorted; requires n >= 3.
std::vector<Butterfly> butterflies(int n);

/// Closed form C(n,3) + C(n-2,3).
Count butterfly_count(int n);

/// Number of butterflies containing the cover edge lower < upper (1 or 2).
int butterflies_on_edge(const LengthVector& lower, const LengthVector& upper);

/// Maximal common lower bounds of a non-empty target set; may be empty.
/// With S = max l1 + min l2 + min l3 + max l4, there are n + 3 - S of them when
/// S <= n + 2, all with l2 = min l2 and l3 = min l3. When S > n + 2 they have
/// l1 = max l1, l4 = max l4 and strictly smaller middle coordinates.
std::vector<LengthVector> maximal_below(std::span<const LengthVector> targets);

/// Minimal common upper bounds, obtained through f2143.
std::vector<LengthVector> minimal_above(std::span<const LengthVector> targets);

/// The vectors with l2 = min l2, l3 = min l3, l1 >= max l1, l4 >= max l4.
/// Equals maximal_below exactly when S <= n + 2; empty otherwise.
std::vector<LengthVector> characterized_maximal_below(std::span<const LengthVector> targets);

/// f2143 image of characterized_maximal_below.
std::vector<LengthVector> characterized_minimal_above(std::span<const LengthVector> targets);

}  // namespace bgposet
