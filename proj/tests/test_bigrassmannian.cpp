#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgposet/bigrassmannian.hpp"
#include "bgposet/bruhat_order.hpp"
#include "bgposet/error.hpp"

#include <algorithm>
#include <set>

using namespace bgposet;

namespace {

int count_descents(const Permutation& p) {
  int d = 0;
  for (int i = 1; i < p.order(); ++i) d += p(i) > p(i + 1);
  return d;
}

bool single_descent_both_ways(const Permutation& p) {
  return count_descents(p) == 1 && count_descents(inverse(p)) == 1;
}

LengthVector lv(int l1, int l2, int l3, int l4, int n) { return LengthVector(l1, l2, l3, l4, n); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("recognition") {
  CHECK(is_bigrassmannian(parse_permutation("123784569")));
  CHECK_FALSE(is_bigrassmannian(identity(5)));
  CHECK(single_descent_both_ways(parse_permutation("34512")));
  CHECK(is_bigrassmannian(parse_permutation("34512")));
  CHECK_FALSE(single_descent_both_ways(parse_permutation("24153")));
  CHECK_FALSE(is_bigrassmannian(parse_permutation("24153")));
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_permutations(n))
      REQUIRE(is_bigrassmannian(p) == single_descent_both_ways(p));
}

TEST_CASE("block decomposition") {
  CHECK(abc_decomposition(parse_permutation("123784569")) == AbcForm{3, 6, 8, 9});
  CHECK(abc_decomposition(parse_permutation("1562347")) == AbcForm{1, 4, 6, 7});
  CHECK(abc_decomposition(parse_permutation("126734589")) == AbcForm{2, 5, 7, 9});
  CHECK(from_abc(AbcForm{3, 6, 8, 9}) == parse_permutation("123784569"));
  CHECK(code_of([] { abc_decomposition(identity(4)); }) == ErrorCode::NotBigrassmannian);
}

TEST_CASE("length vectors") {
  CHECK(length_vector(parse_permutation("126734589")) == lv(3, 3, 2, 3, 9));
  CHECK(from_length_vector(lv(3, 3, 3, 2, 9)) == parse_permutation("126783459"));
  CHECK(length_vector(parse_permutation("31245")) == lv(1, 2, 1, 3, 5));
  CHECK(length_vector(parse_permutation("12453")) == lv(3, 1, 2, 1, 5));
  CHECK(length_vector(parse_permutation("21")) == lv(1, 1, 1, 1, 2));
  CHECK(lv(3, 3, 2, 3, 9).to_string() == "(3,3,2,3)@9");
  CHECK(lv(4, 2, 1, 1, 6).digits() == "4211");
  CHECK(parse_length_vector("(3,3,2,3)@9") == lv(3, 3, 2, 3, 9));

  CHECK(code_of([] { lv(1, 1, 1, 1, 3); }) == ErrorCode::InvalidLengthVector);
  CHECK(code_of([] { lv(0, 2, 2, 3, 5); }) == ErrorCode::InvalidLengthVector);
  CHECK(code_of([] { lv(5, 1, 1, 0, 5); }) == ErrorCode::InvalidLengthVector);
  CHECK(code_of([] { parse_length_vector("(1,2,3)@4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_length_vector("1,2,1,3"); }) == ErrorCode::ParseError);
}

TEST_CASE("every vector satisfies the sum and range conditions, n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& v : enumerate_bg(n)) {
      int sum = 0;
      for (int i = 1; i <= 4; ++i) {
        CHECK(v[i] >= 1);
        CHECK(v[i] <= n - 1);
        sum += v[i];
      }
      CHECK(sum == n + 2);
      const auto p = from_length_vector(v);
      REQUIRE(single_descent_both_ways(p));
      REQUIRE(length_vector(p) == v);
      REQUIRE(from_abc_form(to_abc(v)) == v);
    }
  }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_bg(1).empty());
  CHECK(enumerate_bg(3).size() == 4);
  CHECK(enumerate_bg(4).size() == 10);
  CHECK(enumerate_bg(9).size() == 120);
  // Filtering S_6 directly gives the same set.
  std::set<Permutation> filtered;
  for (const auto& p : all_permutations(6))
    if (single_descent_both_ways(p)) filtered.insert(p);
  CHECK(filtered.size() == 35);
  std::set<Permutation> listed;
  for (const auto& v : enumerate_bg(6)) listed.insert(from_length_vector(v));
  CHECK(listed == filtered);
  const auto vs = enumerate_bg(7);
  CHECK(std::is_sorted(vs.begin(), vs.end()));
  for (int n = 2; n <= 30; ++n)
    CHECK(enumerate_bg(n).size() == static_cast<std::size_t>((n + 1) * n * (n - 1) / 6));
}

TEST_CASE("coordinate permutations") {
  CHECK(f2143(lv(3, 3, 2, 3, 9)) == lv(3, 3, 3, 2, 9));
  CHECK(f_phi(parse_permutation("2143"), lv(3, 3, 2, 3, 9)) == lv(3, 3, 3, 2, 9));
  CHECK(code_of([] { f_phi(identity(3), lv(1, 1, 1, 1, 2)); }) == ErrorCode::OrderMismatch);
  for (int n = 2; n <= 8; ++n) {
    for (const auto& v : enumerate_bg(n)) {
      REQUIRE(f2143(f2143(v)) == v);
      const auto p = from_length_vector(v);
      REQUIRE(f_phi(parse_permutation("1324"), v) == length_vector(inverse(p)));
      REQUIRE(f_phi(parse_permutation("4321"), v) == length_vector(conjugate(p)));
      REQUIRE(length_vector(conjugate(p)) == lv(v.l4(), v.l3(), v.l2(), v.l1(), n));
    }
  }
}

TEST_CASE("vector comparison") {
  CHECK_FALSE(bg_leq(lv(1, 2, 1, 3, 5), lv(3, 1, 2, 1, 5)));
  CHECK_FALSE(bg_leq(lv(3, 1, 2, 1, 5), lv(1, 2, 1, 3, 5)));
  CHECK(bg_leq(lv(2, 2, 1, 2, 5), lv(2, 2, 1, 2, 5)));
  CHECK(code_of([] { bg_leq(lv(1, 1, 1, 1, 2), lv(1, 1, 1, 2, 3)); }) == ErrorCode::OrderMismatch);
  for (int n = 2; n <= 7; ++n) {
    const auto vs = enumerate_bg(n);
    for (const auto& u : vs) {
      for (const auto& v : vs) {
        const bool leq = bg_leq(u, v);
        const auto pu = from_length_vector(u);
        const auto pv = from_length_vector(v);
        REQUIRE(leq == leq_ehresmann(pu, pv));
        REQUIRE(leq == leq_bb_bigrassmannian(pu, pv));
        REQUIRE(leq == bg_leq(f2143(v), f2143(u)));
      }
    }
  }
}

TEST_CASE("beta and alpha") {
  CHECK(beta_general(identity(6)) == 0);
  CHECK(beta_general(parse_permutation("1562347")) == 15);
  CHECK(beta_bg(lv(2, 3, 2, 2, 7)) == 15);
  CHECK(length_vector(parse_permutation("1562347")) == lv(2, 3, 2, 2, 7));
  CHECK(alpha_bg(lv(3, 3, 2, 3, 9)) == 27);
  CHECK(beta_bg(length_vector(parse_permutation("41235"))) == 6);
  CHECK(alpha_bg(length_vector(parse_permutation("12453"))) == 6);
  CHECK(f2143(length_vector(parse_permutation("41235"))) ==
        length_vector(parse_permutation("12453")));
  CHECK(beta_abc(AbcForm{1, 4, 6, 7}) == 15);
  CHECK(alpha_abc(AbcForm{2, 5, 7, 9}) == 27);

  for (int n = 2; n <= 10; ++n)
    for (const auto& v : enumerate_bg(n)) REQUIRE(beta_bg(v) == alpha_bg(f2143(v)));

  // Weakly-below and weakly-above counts by direct filtering.
  for (int n = 2; n <= 7; ++n) {
    const auto vs = enumerate_bg(n);
    for (const auto& v : vs) {
      Count below = 0;
      Count above = 0;
      const auto pv = from_length_vector(v);
      for (const auto& u : vs) {
        below += leq_ehresmann(from_length_vector(u), pv);
        above += leq_ehresmann(pv, from_length_vector(u));
      }
      REQUIRE(beta_bg(v) == below);
      REQUIRE(alpha_bg(v) == above);
      REQUIRE(beta_general(pv) == below);
      REQUIRE(beta_abc(to_abc(v)) == below);
      REQUIRE(alpha_abc(to_abc(v)) == above);
    }
  }
}

TEST_CASE("beta of an arbitrary permutation counts BG elements below it, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Permutation> bg;
    for (const auto& p : all_permutations(n))
      if (single_descent_both_ways(p)) bg.push_back(p);
    for (const auto& s : all_permutations(n)) {
      Count below = 0;
      for (const auto& p : bg) below += leq_ehresmann(p, s);
      REQUIRE(beta_general(s) == below);
    }
  }
}
