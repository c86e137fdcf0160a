#pragma once

#include "bgposet/count.hpp"
#include "bgposet/permutation.hpp"

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace bgposet {

/// Block-interchange parameters: p = 1..a (b+1)..c (a+1)..b (c+1)..n.
struct AbcForm {
  int a = 0;
  int b = 0;
  int c = 0;
  int n = 0;

  friend bool operator==(const AbcForm&, const AbcForm&) = default;
};

/// Canonical key of a bigrassmannian permutation: lengths of the four blocks
/// (l1 = a+1, l2 = b-a, l3 = c-b, l4 = n+1-c). Always valid once constructed:
/// the lengths sum to n+2 and each lies in [1, n-1].
class LengthVector {
 public:
  /// Throws InvalidLengthVector if the coordinates violate the sum or range rule.
  LengthVector(int l1, int l2, int l3, int l4, int n);
  LengthVector(const std::array<int, 4>& coords, int n);

  int l1() const noexcept { return coords_[0]; }
  int l2() const noexcept { return coords_[1]; }
  int l3() const noexcept { return coords_[2]; }
  int l4() const noexcept { return coords_[3]; }

  /// Coordinate i, 1 <= i <= 4.
  int operator[](int i) const { return coords_.at(static_cast<std::size_t>(i - 1)); }

  const std::array<int, 4>& coords() const noexcept { return coords_; }
  int order() const noexcept { return n_; }

  /// Level in the poset: l2 + l3 - 2.
  int rank() const noexcept { return coords_[1] + coords_[2] - 2; }

  /// `(l1,l2,l3,l4)@n`
  std::string to_string() const;

  /// Compact `4211` digit form used in tables (coordinates <= 9 only).
  std::string digits() const;

  static bool is_valid(const std::array<int, 4>& coords, int n) noexcept;

  friend bool operator==(const LengthVector&, const LengthVector&) = default;
  // Lexicographic on coordinates, then order; the canonical export order.
  friend auto operator<=>(const LengthVector& x, const LengthVector& y) {
    if (auto c = x.coords_ <=> y.coords_; c != 0) return c;
    return x.n_ <=> y.n_;
  }

 private:
  std::array<int, 4> coords_;
  int n_;
};

/// Parses `(l1,l2,l3,l4)@n`.
LengthVector parse_length_vector(std::string_view text);

bool is_bigrassmannian(const Permutation& p);

AbcForm abc_decomposition(const Permutation& p);
Permutation from_abc(const AbcForm& form);

LengthVector length_vector(const Permutation& p);
Permutation from_length_vector(const LengthVector& v);

AbcForm to_abc(const LengthVector& v);
LengthVector from_abc_form(const AbcForm& form);

/// Every valid length vector of order n, lexicographic on (l1, l2, l3).
std::vector<LengthVector> enumerate_bg(int n);

/// Coordinate i of the image is coordinate phi(i) of v; phi must have order 4.
LengthVector f_phi(const Permutation& phi, const LengthVector& v);

/// (l1,l2,l3,l4) -> (l2,l1,l4,l3); an order-reversing involution.
LengthVector f2143(const LengthVector& v);

/// Bruhat comparability u <= v via coordinate inequalities.
bool bg_leq(const LengthVector& u, const LengthVector& v);

/// Number of bigrassmannian permutations weakly below s: half the sum of (s(i)-i)^2.
Count beta_general(const Permutation& s);

Count beta_bg(const LengthVector& v);
Count alpha_bg(const LengthVector& v);

/// The same counts expressed in block-interchange parameters.
Count beta_abc(const AbcForm& form);
Count alpha_abc(const AbcForm& form);

}  // namespace bgposet

template <>
struct std::hash<bgposet::LengthVector> {
  std::size_t operator()(const bgposet::LengthVector& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.order());
    for (int c : v.coords()) h = h * 131 + static_cast<std::size_t>(c);
    return h;
  }
};
