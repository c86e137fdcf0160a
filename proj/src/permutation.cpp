#include "bgposet/permutation.hpp"
#include "bgposet/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace bgposet {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorCode::InvalidOrder,
                "order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
  }
}

Permutation::Permutation(std::vector<int> values) : word_(std::move(values)) {
  if (word_.empty()) throw Error(ErrorCode::EmptyInput, "permutation has no entries");
  if (word_.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw Error(ErrorCode::InvalidOrder, "order " + std::to_string(word_.size()) +
                                             " exceeds maximum " + std::to_string(kMaxOrder));
  }
  const int n = order();
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n) {
      throw Error(ErrorCode::NotABijection, "value " + std::to_string(v) + " outside [1, " +
                                                std::to_string(n) + "]");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::NotABijection, "value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation make_permutation(std::span<const int> values) {
  return Permutation(std::vector<int>(values.begin(), values.end()));
}

Permutation make_permutation(std::initializer_list<int> values) {
  return Permutation(std::vector<int>(values));
}

Permutation identity(int n) {
  check_order(n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
  const int n = p.order();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(std::move(w));
}

Permutation conjugate(const Permutation& p) {
  const int n = p.order();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = n + 1 - p(n + 1 - i);
  return Permutation(std::move(w));
}

long long inversion_number(const Permutation& p) {
  const auto w = p.word();
  long long count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

Count inversions(const Permutation& p) { return Count(inversion_number(p)); }

std::vector<int> descents(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.order(); ++i)
    if (p(i) > p(i + 1)) out.push_back(i);
  return out;
}

std::vector<std::pair<Permutation, ReductionStep>> reductions(const Permutation& p) {
  std::vector<std::pair<Permutation, ReductionStep>> out;
  const int n = p.order();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p(i) <= p(j)) continue;
      int crossing = 0;
      for (int k = i + 1; k < j; ++k)
        if (p(i) > p(k) && p(k) > p(j)) ++crossing;
      std::vector<int> w(p.word().begin(), p.word().end());
      std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]);
      out.emplace_back(Permutation(std::move(w)), ReductionStep{i, j, crossing});
    }
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, "'" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw Error(ErrorCode::EmptyInput, "empty permutation text");

  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw fail("digit words use the digits 1-9 only");
      values.push_back(ch - '0');
    }
    if (values.size() > 9) throw fail("digit words are limited to order 9; use commas");
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find(',', pos), text.size());
      std::string_view token = text.substr(pos, end - pos);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
        throw fail("bad entry '" + std::string(token) + "'");
      values.push_back(value);
      pos = end + 1;
    }
  }
  return Permutation(std::move(values));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  const bool compact = p.order() <= 9;
  for (int i = 1; i <= p.order(); ++i) {
    if (!compact && i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  check_order(n);
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace bgposet
