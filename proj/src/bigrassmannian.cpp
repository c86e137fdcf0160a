#include "bgposet/bigrassmannian.hpp"
#include "bgposet/error.hpp"

#include <charconv>
#include <numeric>

namespace bgposet {

namespace {

std::string coords_text(const std::array<int, 4>& c, int n) {
  return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) +
         "," + std::to_string(c[3]) + ")@" + std::to_string(n);
}

Count half(Count product) {
  // Products fed here are always even.
  return product / 2;
}

}  // namespace

bool LengthVector::is_valid(const std::array<int, 4>& coords, int n) noexcept {
  if (n < 2 || n > kMaxOrder) return false;
  int sum = 0;
  for (int c : coords) {
    if (c < 1 || c > n - 1) return false;
    sum += c;
  }
  return sum == n + 2;
}

LengthVector::LengthVector(const std::array<int, 4>& coords, int n) : coords_(coords), n_(n) {
  if (!is_valid(coords, n)) {
    throw Error(ErrorCode::InvalidLengthVector,
                coords_text(coords, n) + " needs entries in [1, n-1] summing to n+2");
  }
}

LengthVector::LengthVector(int l1, int l2, int l3, int l4, int n)
    : LengthVector(std::array<int, 4>{l1, l2, l3, l4}, n) {}

std::string LengthVector::to_string() const { return coords_text(coords_, n_); }

std::string LengthVector::digits() const {
  std::string out;
  for (int c : coords_) out += std::to_string(c);
  return out;
}

LengthVector parse_length_vector(std::string_view text) {
  auto fail = [&](const char* why) {
    return Error(ErrorCode::ParseError, "'" + std::string(text) + "': " + why);
  };
  const auto at = text.find(")@");
  if (text.size() < 2 || text.front() != '(' || at == std::string_view::npos)
    throw fail("expected (l1,l2,l3,l4)@n");

  auto read_int = [&](std::string_view token) {
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw fail("non-integer entry");
    return value;
  };

  std::string_view body = text.substr(1, at - 1);
  std::array<int, 4> coords{};
  std::size_t pos = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t end = k < 3 ? body.find(',', pos) : body.size();
    if (end == std::string_view::npos) throw fail("expected four coordinates");
    coords[k] = read_int(body.substr(pos, end - pos));
    pos = end + 1;
  }
  const int n = read_int(text.substr(at + 2));
  return LengthVector(coords, n);
}

bool is_bigrassmannian(const Permutation& p) {
  return descents(p).size() == 1 && descents(inverse(p)).size() == 1;
}

Permutation from_abc(const AbcForm& f) {
  check_order(f.n);
  if (!(0 <= f.a && f.a < f.b && f.b < f.c && f.c <= f.n)) {
    throw Error(ErrorCode::NotBigrassmannian, "need 0 <= a < b < c <= n");
  }
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(f.n));
  for (int v = 1; v <= f.a; ++v) w.push_back(v);
  for (int v = f.b + 1; v <= f.c; ++v) w.push_back(v);
  for (int v = f.a + 1; v <= f.b; ++v) w.push_back(v);
  for (int v = f.c + 1; v <= f.n; ++v) w.push_back(v);
  return Permutation(std::move(w));
}

AbcForm abc_decomposition(const Permutation& p) {
  if (!is_bigrassmannian(p)) {
    throw Error(ErrorCode::NotBigrassmannian, format_permutation(p) + " is not bigrassmannian");
  }
  const int n = p.order();
  int a = 0;
  while (a < n && p(a + 1) == a + 1) ++a;
  const int d = descents(p).front();
  const AbcForm form{a, p(a + 1) - 1, p(d), n};
  if (from_abc(form) != p) {
    throw Error(ErrorCode::NotBigrassmannian, format_permutation(p) + " has no block form");
  }
  return form;
}

AbcForm to_abc(const LengthVector& v) {
  const int a = v.l1() - 1;
  const int b = a + v.l2();
  return AbcForm{a, b, b + v.l3(), v.order()};
}

LengthVector from_abc_form(const AbcForm& f) {
  return LengthVector(f.a + 1, f.b - f.a, f.c - f.b, f.n + 1 - f.c, f.n);
}

LengthVector length_vector(const Permutation& p) { return from_abc_form(abc_decomposition(p)); }

Permutation from_length_vector(const LengthVector& v) { return from_abc(to_abc(v)); }

std::vector<LengthVector> enumerate_bg(int n) {
  check_order(n);
  std::vector<LengthVector> out;
  for (int l1 = 1; l1 <= n - 1; ++l1)
    for (int l2 = 1; l2 <= n - 1; ++l2)
      for (int l3 = 1; l3 <= n - 1; ++l3) {
        const std::array<int, 4> c{l1, l2, l3, n + 2 - l1 - l2 - l3};
        if (LengthVector::is_valid(c, n)) out.emplace_back(c, n);
      }
  return out;
}

LengthVector f_phi(const Permutation& phi, const LengthVector& v) {
  if (phi.order() != 4) {
    throw Error(ErrorCode::OrderMismatch, "coordinate permutation must have order 4");
  }
  std::array<int, 4> image{};
  for (int i = 1; i <= 4; ++i) image[static_cast<std::size_t>(i - 1)] = v[phi(i)];
  return LengthVector(image, v.order());
}

LengthVector f2143(const LengthVector& v) {
  return LengthVector(v.l2(), v.l1(), v.l4(), v.l3(), v.order());
}

bool bg_leq(const LengthVector& u, const LengthVector& v) {
  if (u.order() != v.order()) {
    throw Error(ErrorCode::OrderMismatch, u.to_string() + " vs " + v.to_string());
  }
  return u.l1() >= v.l1() && u.l4() >= v.l4() && u.l2() <= v.l2() && u.l3() <= v.l3();
}

Count beta_general(const Permutation& s) {
  Count sum = 0;
  for (int i = 1; i <= s.order(); ++i) {
    const long long d = s(i) - i;
    sum += d * d;
  }
  return half(sum);
}

Count beta_bg(const LengthVector& v) {
  return half(Count(v.l2()) * v.l3() * (v.l2() + v.l3()));
}

Count alpha_bg(const LengthVector& v) {
  return half(Count(v.l1()) * v.l4() * (v.l1() + v.l4()));
}

Count beta_abc(const AbcForm& f) {
  return half(Count(f.b - f.a) * (f.c - f.b) * (f.c - f.a));
}

Count alpha_abc(const AbcForm& f) {
  return half(Count(f.a + 1) * (f.n - f.c + 1) * (f.n - f.c + 1 + f.a + 1));
}

}  // namespace bgposet
