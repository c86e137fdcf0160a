#pragma once

#include "bgposet/permutation.hpp"

#include <string>
#include <vector>

namespace bgposet {

/// Default order cap for the reduction-closure oracle.
inline constexpr int kDefaultReductionOracleMaxOrder = 8;

/// Staircase of sorted prefixes: row j (1-based) is p(1..j) in increasing order.
class MonotoneTriangle {
 public:
  explicit MonotoneTriangle(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {}

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row(int j) const { return rows_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  /// Row lengths, strict increase, last row = 1..n, and the interleaving
  /// (Gog) condition between consecutive rows.
  bool is_valid() const;

  /// Left-justified staircase, one row per line, entries separated by spaces.
  std::string to_string() const;

  friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

MonotoneTriangle monotone_triangle(const Permutation& p);

/// Tableau criterion: every sorted-prefix entry of p is <= the matching entry of q.
bool leq_ehresmann(const Permutation& p, const Permutation& q);

/// Reference oracle: searches downward from q through reductions for p.
/// Throws SizeLimitExceeded when the order exceeds `max_order` (capped at 16).
bool leq_reduction_oracle(const Permutation& p, const Permutation& q,
                          int max_order = kDefaultReductionOracleMaxOrder);

/// Single-row tableau test for bigrassmannian p, at p's unique descent.
bool leq_bb_bigrassmannian(const Permutation& p, const Permutation& q);

}  // namespace bgposet
