#include "bgposet/poset.hpp"
#include "bgposet/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bgposet {

namespace {

constexpr std::array<int, 2> kOuter{0, 3};
constexpr std::array<int, 2> kInner{1, 2};

void require_poset_order(int n) {
  check_order(n);
  if (n < 2) throw Error(ErrorCode::InvalidOrder, "poset needs n >= 2");
}

void require_same_order(const LengthVector& u, const LengthVector& v) {
  if (u.order() != v.order()) {
    throw Error(ErrorCode::OrderMismatch, u.to_string() + " vs " + v.to_string());
  }
}

// Move one unit from coordinate `from` to coordinate `to`, if still valid.
std::optional<LengthVector> shift(const LengthVector& v, int from, int to) {
  auto c = v.coords();
  c[static_cast<std::size_t>(from)] -= 1;
  c[static_cast<std::size_t>(to)] += 1;
  if (!LengthVector::is_valid(c, v.order())) return std::nullopt;
  return LengthVector(c, v.order());
}

// Upward injection below the middle. Splits on l1 + l2 against l2 + l3.
LengthVector raise_towards_middle(const LengthVector& v) {
  if (v.l1() + v.l2() > v.l2() + v.l3()) {
    return LengthVector(v.l1() - 1, v.l2() + 1, v.l3(), v.l4(), v.order());
  }
  return LengthVector(v.l1(), v.l2(), v.l3() + 1, v.l4() - 1, v.order());
}

}  // namespace

std::vector<LengthVector> up_covers(const LengthVector& v) {
  std::vector<LengthVector> out;
  for (int from : kOuter)
    for (int to : kInner)
      if (auto w = shift(v, from, to)) out.push_back(*w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LengthVector> down_covers(const LengthVector& v) {
  std::vector<LengthVector> out;
  for (int from : kInner)
    for (int to : kOuter)
      if (auto w = shift(v, from, to)) out.push_back(*w);
  std::sort(out.begin(), out.end());
  return out;
}

HassePoset HassePoset::build(int n) {
  require_poset_order(n);
  HassePoset poset;
  poset.n_ = n;
  poset.vertices_ = enumerate_bg(n);
  std::sort(poset.vertices_.begin(), poset.vertices_.end());
  const std::size_t size = poset.vertices_.size();
  poset.up_.resize(size);
  poset.down_.resize(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (const auto& w : up_covers(poset.vertices_[i])) {
      const std::size_t j = poset.index_of(w);
      poset.up_[i].push_back(j);
      poset.down_[j].push_back(i);
      ++poset.edges_;
    }
  }
  for (auto& d : poset.down_) std::sort(d.begin(), d.end());
  return poset;
}

std::size_t HassePoset::index_of(const LengthVector& v) const {
  if (v.order() != n_) {
    throw Error(ErrorCode::OrderMismatch,
                v.to_string() + " is not an element of order " + std::to_string(n_));
  }
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::size_t> HassePoset::level(int k) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].rank() == k) out.push_back(i);
  return out;
}

int up_degree(const LengthVector& v) {
  return 4 - 2 * (v.l1() == 1) - 2 * (v.l4() == 1);
}

int down_degree(const LengthVector& v) {
  return 4 - 2 * (v.l2() == 1) - 2 * (v.l3() == 1);
}

Count degree(const LengthVector& v) {
  if (v.order() <= 2) {
    throw Error(ErrorCode::OrderTooSmall, "degree is defined for n > 2");
  }
  return up_degree(v) + down_degree(v);
}

Count bg_count(int n) {
  check_order(n);
  return binomial(n + 1, 3);
}

Count edge_count(int n) {
  require_poset_order(n);
  return 4 * binomial(n, 3);
}

std::vector<LengthVector> minimal_elements(int n) {
  require_poset_order(n);
  std::vector<LengthVector> out;
  for (int l1 = 1; l1 <= n - 1; ++l1) out.emplace_back(l1, 1, 1, n - l1, n);
  return out;
}

std::vector<LengthVector> maximal_elements(int n) {
  require_poset_order(n);
  std::vector<LengthVector> out;
  for (int l2 = 1; l2 <= n - 1; ++l2) out.emplace_back(1, l2, n - l2, 1, n);
  return out;
}

Count level_size(int n, int k) {
  require_poset_order(n);
  if (k < 0 || k > n - 2) {
    throw Error(ErrorCode::LevelOutOfRange,
                "level " + std::to_string(k) + " outside [0, " + std::to_string(n - 2) + "]");
  }
  return Count(k + 1) * (n - k - 1);
}

Count count_saturated_chains(const LengthVector& u, const LengthVector& v) {
  if (!bg_leq(u, v)) {
    throw Error(ErrorCode::NotComparable, u.to_string() + " is not below " + v.to_string());
  }
  const int r = u.l1() + u.l4() - v.l1() - v.l4();
  return binomial(r, u.l1() - v.l1()) * binomial(r, v.l2() - u.l2());
}

Count count_maximal_chains(int n) {
  require_poset_order(n);
  return power(4, static_cast<unsigned>(n - 2));
}

Count hasse_distance(const LengthVector& u, const LengthVector& v) {
  require_same_order(u, v);
  const int outer = std::abs(u.l1() - v.l1()) + std::abs(u.l4() - v.l4());
  const int inner = std::abs(u.l2() - v.l2()) + std::abs(u.l3() - v.l3());
  return std::max(outer, inner);
}

int middle_level(int n) {
  require_poset_order(n);
  return (n + 1) / 2 - 1;
}

std::optional<LengthVector> sperner_step(const LengthVector& v) {
  const int middle = middle_level(v.order());
  if (v.rank() < middle) return raise_towards_middle(v);
  if (v.rank() > middle) return f2143(raise_towards_middle(f2143(v)));
  return std::nullopt;
}

std::vector<std::vector<LengthVector>> sperner_decomposition(int n) {
  require_poset_order(n);
  const int middle = middle_level(n);
  std::map<LengthVector, LengthVector> from_below;
  std::map<LengthVector, LengthVector> from_above;
  std::vector<LengthVector> centre;
  for (const auto& v : enumerate_bg(n)) {
    const auto image = sperner_step(v);
    if (!image) {
      centre.push_back(v);
      continue;
    }
    auto& preimages = v.rank() < middle ? from_below : from_above;
    if (!preimages.emplace(*image, v).second) {
      throw std::logic_error("chain partition map is not injective at " + image->to_string());
    }
  }

  std::vector<std::vector<LengthVector>> paths;
  for (const auto& m : centre) {
    std::vector<LengthVector> path{m};
    for (auto it = from_below.find(m); it != from_below.end(); it = from_below.find(it->second))
      path.push_back(it->second);
    std::reverse(path.begin(), path.end());
    for (auto it = from_above.find(m); it != from_above.end(); it = from_above.find(it->second))
      path.push_back(it->second);
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

Count max_antichain_size(int n) {
  require_poset_order(n);
  return Count(n / 2) * ((n + 1) / 2);
}

std::vector<Butterfly> butterflies(int n) {
  require_poset_order(n);
  if (n < 3) throw Error(ErrorCode::InvalidOrder, "butterflies need n >= 3");
  std::set<Butterfly> found;
  for (const auto& u1 : enumerate_bg(n)) {
    const auto up1 = up_covers(u1);
    std::set<LengthVector> partners;
    for (const auto& s : up1)
      for (const auto& u2 : down_covers(s))
        if (u2 != u1) partners.insert(u2);
    for (const auto& u2 : partners) {
      const auto up2 = up_covers(u2);
      std::vector<LengthVector> common;
      std::set_intersection(up1.begin(), up1.end(), up2.begin(), up2.end(),
                            std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j)
          found.insert(Butterfly{{std::min(u1, u2), std::max(u1, u2)}, {common[i], common[j]}});
    }
  }
  return {found.begin(), found.end()};
}

Count butterfly_count(int n) {
  require_poset_order(n);
  if (n < 3) throw Error(ErrorCode::InvalidOrder, "butterflies need n >= 3");
  return binomial(n, 3) + binomial(n - 2, 3);
}

int butterflies_on_edge(const LengthVector& lower, const LengthVector& upper) {
  require_same_order(lower, upper);
  const auto up1 = up_covers(lower);
  if (!std::binary_search(up1.begin(), up1.end(), upper)) {
    throw Error(ErrorCode::NotComparable,
                upper.to_string() + " does not cover " + lower.to_string());
  }
  int count = 0;
  for (const auto& partner : down_covers(upper)) {
    if (partner == lower) continue;
    for (const auto& other : up_covers(partner))
      if (other != upper && std::binary_search(up1.begin(), up1.end(), other)) ++count;
  }
  return count;
}

namespace {

struct TargetBounds {
  int n, max1, min2, min3, max4;
};

TargetBounds target_bounds(std::span<const LengthVector> targets) {
  if (targets.empty()) throw Error(ErrorCode::EmptyTargetSet, "no targets given");
  const int n = targets.front().order();
  TargetBounds b{n, 0, n, n, 0};
  for (const auto& t : targets) {
    require_same_order(targets.front(), t);
    b.max1 = std::max(b.max1, t.l1());
    b.min2 = std::min(b.min2, t.l2());
    b.min3 = std::min(b.min3, t.l3());
    b.max4 = std::max(b.max4, t.l4());
  }
  return b;
}

std::vector<LengthVector> flip_all(std::span<const LengthVector> vs) {
  std::vector<LengthVector> out;
  for (const auto& v : vs) out.push_back(f2143(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LengthVector> characterized_maximal_below(std::span<const LengthVector> targets) {
  const auto b = target_bounds(targets);
  // The outer coordinates may absorb the slack n + 2 - sum in any split.
  const int slack = b.n + 2 - (b.max1 + b.min2 + b.min3 + b.max4);
  std::vector<LengthVector> out;
  for (int extra = 0; extra <= slack; ++extra)
    out.emplace_back(b.max1 + extra, b.min2, b.min3, b.max4 + slack - extra, b.n);
  return out;
}

std::vector<LengthVector> maximal_below(std::span<const LengthVector> targets) {
  const auto b = target_bounds(targets);
  if (b.max1 + b.min2 + b.min3 + b.max4 <= b.n + 2) return characterized_maximal_below(targets);
  // Negative slack: the outer coordinates sit at their maxima and the middle pair
  // shares what is left, each capped by its minimum. All such vectors share a level.
  const int middle = b.n + 2 - b.max1 - b.max4;
  std::vector<LengthVector> out;
  for (int l2 = std::max(1, middle - b.min3); l2 <= std::min(b.min2, middle - 1); ++l2)
    out.emplace_back(b.max1, l2, middle - l2, b.max4, b.n);
  return out;
}

std::vector<LengthVector> characterized_minimal_above(std::span<const LengthVector> targets) {
  return flip_all(characterized_maximal_below(flip_all(targets)));
}

std::vector<LengthVector> minimal_above(std::span<const LengthVector> targets) {
  return flip_all(maximal_below(flip_all(targets)));
}

}  // namespace bgposet
