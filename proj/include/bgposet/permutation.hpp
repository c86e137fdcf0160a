#pragma once

#include "bgposet/count.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#ifndef BGPOSET_MAX_ORDER
#define BGPOSET_MAX_ORDER 64
#endif

namespace bgposet {

/// Largest order accepted anywhere in the library (build-time setting).
inline constexpr int kMaxOrder = BGPOSET_MAX_ORDER;

/// Throws InvalidOrder unless 1 <= n <= kMaxOrder.
void check_order(int n);

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-based at the interface; the object is immutable once built.
class Permutation {
 public:
  /// Validates that `values` is a bijection of [n], n = values.size().
  explicit Permutation(std::vector<int> values);

  int order() const noexcept { return static_cast<int>(word_.size()); }

  /// Image of position i, 1 <= i <= order().
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> word() const noexcept { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Interchange of positions i < j that resolves an inversion; crossing_count
/// is the number of k strictly between them with p(i) > p(k) > p(j).
struct ReductionStep {
  int i = 0;
  int j = 0;
  int crossing_count = 0;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

Permutation make_permutation(std::span<const int> values);
Permutation make_permutation(std::initializer_list<int> values);
Permutation identity(int n);
Permutation inverse(const Permutation& p);

/// Reverse-complement: i -> n+1 - p(n+1-i).
Permutation conjugate(const Permutation& p);

Count inversions(const Permutation& p);

/// Inversion count as a machine integer, for internal sweeps at small n.
long long inversion_number(const Permutation& p);

/// Descent positions {i : p(i) > p(i+1)}, ascending.
std::vector<int> descents(const Permutation& p);

/// One entry per inversion pair (i, j), in lexicographic order of (i, j).
std::vector<std::pair<Permutation, ReductionStep>> reductions(const Permutation& p);

/// Parses `1,4,2,3,5` or, for n <= 9, the digit word `14235`.
Permutation parse_permutation(std::string_view text);

/// Digit word for n <= 9, comma-separated otherwise.
std::string format_permutation(const Permutation& p);

/// Calls `visit` once for every permutation of [n], in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

std::vector<Permutation> all_permutations(int n);

}  // namespace bgposet

template <>
struct std::hash<bgposet::Permutation> {
  std::size_t operator()(const bgposet::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.word()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ULL;
    }
    return h;
  }
};
