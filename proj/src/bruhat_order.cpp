#include "bgposet/bruhat_order.hpp"
#include "bgposet/bigrassmannian.hpp"
#include "bgposet/error.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <unordered_set>

namespace bgposet {

namespace {

void require_same_order(const Permutation& p, const Permutation& q) {
  if (p.order() != q.order()) {
    throw Error(ErrorCode::OrderMismatch, "orders " + std::to_string(p.order()) + " and " +
                                              std::to_string(q.order()) + " differ");
  }
}

// Insert v into the ascending prefix, keeping it sorted.
void insert_sorted(std::vector<int>& prefix, int v) {
  prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
}

// Oracle states are packed 4 bits per entry (value - 1), so n <= 16.
constexpr int kPackedMaxOrder = 16;
using Packed = std::uint64_t;

Packed pack(std::span<const int> w) {
  Packed code = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    code |= static_cast<Packed>(w[i] - 1) << (4 * i);
  return code;
}

int entry(Packed code, int i) { return static_cast<int>((code >> (4 * i)) & 0xF); }

Packed swapped(Packed code, int i, int j) {
  const Packed vi = (code >> (4 * i)) & 0xF;
  const Packed vj = (code >> (4 * j)) & 0xF;
  code &= ~((Packed{0xF} << (4 * i)) | (Packed{0xF} << (4 * j)));
  return code | (vj << (4 * i)) | (vi << (4 * j));
}

}  // namespace

bool MonotoneTriangle::is_valid() const {
  const std::size_t n = rows_.size();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& row = rows_[j];
    if (row.size() != j + 1) return false;
    if (!std::is_sorted(row.begin(), row.end()) ||
        std::adjacent_find(row.begin(), row.end()) != row.end())
      return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (rows_.back()[i] != static_cast<int>(i + 1)) return false;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const auto& upper = rows_[j];
    const auto& lower = rows_[j + 1];
    for (std::size_t i = 0; i < upper.size(); ++i) {
      if (lower[i] > upper[i] || upper[i] > lower[i + 1]) return false;
    }
  }
  return true;
}

std::string MonotoneTriangle::to_string() const {
  std::ostringstream out;
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

MonotoneTriangle monotone_triangle(const Permutation& p) {
  std::vector<std::vector<int>> rows;
  std::vector<int> prefix;
  for (int j = 1; j <= p.order(); ++j) {
    insert_sorted(prefix, p(j));
    rows.push_back(prefix);
  }
  return MonotoneTriangle(std::move(rows));
}

bool leq_ehresmann(const Permutation& p, const Permutation& q) {
  require_same_order(p, q);
  std::vector<int> pp;
  std::vector<int> qq;
  pp.reserve(static_cast<std::size_t>(p.order()));
  qq.reserve(static_cast<std::size_t>(q.order()));
  for (int j = 1; j <= p.order(); ++j) {
    insert_sorted(pp, p(j));
    insert_sorted(qq, q(j));
    for (std::size_t i = 0; i < pp.size(); ++i)
      if (pp[i] > qq[i]) return false;
  }
  return true;
}

bool leq_reduction_oracle(const Permutation& p, const Permutation& q, int max_order) {
  require_same_order(p, q);
  const int n = p.order();
  const int cap = std::min(max_order, kPackedMaxOrder);
  if (n > cap) {
    throw Error(ErrorCode::SizeLimitExceeded, "reduction oracle limited to order " +
                                                  std::to_string(cap) + ", got " +
                                                  std::to_string(n));
  }
  const Packed target = pack(p.word());
  const long long target_inv = inversion_number(p);

  // Depth-first descent from q; a reduction strictly lowers the inversion
  // count, so states at or below target_inv (other than p) are dead ends.
  std::unordered_set<Packed> visited;
  std::vector<std::pair<Packed, long long>> stack{{pack(q.word()), inversion_number(q)}};
  visited.insert(stack.back().first);
  while (!stack.empty()) {
    const auto [code, inv] = stack.back();
    stack.pop_back();
    if (code == target) return true;
    if (inv <= target_inv) continue;
    for (int i = 0; i < n; ++i) {
      const int vi = entry(code, i);
      for (int j = i + 1; j < n; ++j) {
        const int vj = entry(code, j);
        if (vi <= vj) continue;
        int crossing = 0;
        for (int k = i + 1; k < j; ++k) {
          const int vk = entry(code, k);
          if (vi > vk && vk > vj) ++crossing;
        }
        const long long next_inv = inv - (2 * crossing + 1);
        if (next_inv < target_inv) continue;
        const Packed next = swapped(code, i, j);
        if (visited.insert(next).second) stack.emplace_back(next, next_inv);
      }
    }
  }
  return false;
}

bool leq_bb_bigrassmannian(const Permutation& p, const Permutation& q) {
  require_same_order(p, q);
  if (!is_bigrassmannian(p)) {
    throw Error(ErrorCode::NotBigrassmannian,
                format_permutation(p) + " is not bigrassmannian");
  }
  const int d = descents(p).front();
  std::vector<int> pp(p.word().begin(), p.word().begin() + d);
  std::vector<int> qq(q.word().begin(), q.word().begin() + d);
  std::sort(pp.begin(), pp.end());
  std::sort(qq.begin(), qq.end());
  for (std::size_t i = 0; i < pp.size(); ++i)
    if (pp[i] > qq[i]) return false;
  return true;
}

}  // namespace bgposet
