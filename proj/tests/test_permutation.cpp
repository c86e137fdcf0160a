#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgposet/error.hpp"
#include "bgposet/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace bgposet;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

// Counts pairs i < j with p(i) > p(j) straight from the definition.
long long naive_inversions(const std::vector<int>& w) {
  long long count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  return count;
}

std::vector<int> to_vec(const Permutation& p) { return {p.word().begin(), p.word().end()}; }

}  // namespace

TEST_CASE("construction validates the word") {
  CHECK(make_permutation({1, 2, 3}) == identity(3));
  const auto p = make_permutation({1, 4, 2, 3, 5});
  CHECK(p.order() == 5);
  CHECK(p(2) == 4);
  CHECK(code_of([] { make_permutation({1, 1, 2}); }) == ErrorCode::NotABijection);
  CHECK(code_of([] { make_permutation({0, 1}); }) == ErrorCode::NotABijection);
  CHECK(code_of([] { make_permutation({1, 2, 4}); }) == ErrorCode::NotABijection);
  CHECK(code_of([] { Permutation(std::vector<int>{}); }) == ErrorCode::EmptyInput);
  std::vector<int> big(kMaxOrder + 1);
  std::iota(big.begin(), big.end(), 1);
  CHECK(code_of([&] { Permutation{big}; }) == ErrorCode::InvalidOrder);
}

TEST_CASE("identity") {
  CHECK(to_vec(identity(1)) == std::vector<int>{1});
  CHECK(to_vec(identity(5)) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(format_permutation(identity(9)) == "123456789");
  CHECK(code_of([] { identity(0); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("inverse") {
  const auto p = make_permutation({1, 4, 2, 3, 5});
  // Oracle: position of each value, found by linear search.
  std::vector<int> expected;
  for (int v = 1; v <= 5; ++v)
    expected.push_back(static_cast<int>(std::find(p.word().begin(), p.word().end(), v) -
                                        p.word().begin()) + 1);
  CHECK(expected == std::vector<int>{1, 3, 4, 2, 5});
  CHECK(to_vec(inverse(p)) == std::vector<int>{1, 3, 4, 2, 5});
  CHECK(inverse(identity(6)) == identity(6));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(identity(7)) == identity(7));
  // 31245 -> 12453 by p(i) -> n+1-p(n+1-i).
  CHECK(conjugate(parse_permutation("31245")) == parse_permutation("12453"));
}

TEST_CASE("involutions and inversion symmetry on all of S_n, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      REQUIRE(inverse(inverse(p)) == p);
      REQUIRE(conjugate(conjugate(p)) == p);
      REQUIRE(inversions(p) == inversions(inverse(p)));
      REQUIRE(inversion_number(p) == naive_inversions(to_vec(p)));
    });
  }
}

TEST_CASE("inversions") {
  CHECK(inversions(identity(8)) == 0);
  CHECK(inversions(make_permutation({2, 1})) == 1);
  CHECK(inversions(parse_permutation("31245")) == 2);
  // 12453 inverts (4,3) and (5,3), so it sits at the same S_5 level as 31245.
  CHECK(naive_inversions({1, 2, 4, 5, 3}) == 2);
  CHECK(inversions(parse_permutation("12453")) == 2);
  std::vector<int> rev(40);
  for (int i = 0; i < 40; ++i) rev[i] = 40 - i;
  CHECK(inversions(Permutation{rev}) == 780);
}

TEST_CASE("descents") {
  CHECK(descents(identity(5)).empty());
  CHECK(descents(parse_permutation("1562347")) == std::vector<int>{3});
  const auto p = parse_permutation("123784569");
  std::vector<int> scanned;
  for (int i = 1; i < p.order(); ++i)
    if (p(i) > p(i + 1)) scanned.push_back(i);
  CHECK(scanned == std::vector<int>{5});
  CHECK(descents(p) == std::vector<int>{5});
}

TEST_CASE("reductions") {
  CHECK(reductions(identity(4)).empty());
  const auto r = reductions(make_permutation({2, 1}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == identity(2));
  CHECK(r[0].second == ReductionStep{1, 2, 0});
  // 3412: swapping positions 1,4 (values 3,2) crosses 4 at position 2 only.
  bool seen = false;
  for (const auto& [q, step] : reductions(parse_permutation("3412"))) {
    if (step.i == 1 && step.j == 4) {
      CHECK(q == parse_permutation("2413"));
      CHECK(step.crossing_count == 0);
      seen = true;
    }
  }
  CHECK(seen);
}

TEST_CASE("every reduction lowers inversions by 2N+1, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [](const Permutation& p) {
      long long pairs = 0;
      for (int i = 1; i <= p.order(); ++i)
        for (int j = i + 1; j <= p.order(); ++j) pairs += p(i) > p(j);
      const auto rs = reductions(p);
      REQUIRE(static_cast<long long>(rs.size()) == pairs);
      for (const auto& [q, step] : rs) {
        REQUIRE(p(step.i) > p(step.j));
        int crossing = 0;
        for (int k = step.i + 1; k < step.j; ++k)
          crossing += p(step.j) < p(k) && p(k) < p(step.i);
        REQUIRE(step.crossing_count == crossing);
        REQUIRE(inversions(p) == inversions(q) + 2 * step.crossing_count + 1);
      }
    });
  }
}

TEST_CASE("parsing and formatting") {
  CHECK(format_permutation(parse_permutation("34512")) == "34512");
  CHECK(parse_permutation("3,4,5,1,2") == parse_permutation("34512"));
  std::vector<int> w(12);
  for (int i = 0; i < 12; ++i) w[i] = 12 - i;
  const Permutation p{w};
  CHECK(format_permutation(p) == "12,11,10,9,8,7,6,5,4,3,2,1");
  CHECK(parse_permutation(format_permutation(p)) == p);
  CHECK(code_of([] { parse_permutation(""); }) == ErrorCode::EmptyInput);
  CHECK(code_of([] { parse_permutation("12a"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_permutation("112"); }) == ErrorCode::NotABijection);
}

TEST_CASE("enumeration is lexicographic and complete") {
  const auto all = all_permutations(5);
  CHECK(all.size() == 120);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  CHECK(all.front() == identity(5));
}

TEST_CASE("random round trips at larger n") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> w(30);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng);
    const Permutation p{w};
    CHECK(inverse(inverse(p)) == p);
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(inversion_number(p) == naive_inversions(w));
  }
}
