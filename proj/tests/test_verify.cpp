#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgposet/verify.hpp"

#include <algorithm>

using namespace bgposet;

TEST_CASE("suite names round trip") {
  for (Suite s : {Suite::All, Suite::Order, Suite::Counts, Suite::Sperner, Suite::Butterfly,
                  Suite::Below})
    CHECK(parse_suite(to_string(s)) == s);
  CHECK_FALSE(parse_suite("everything"));
}

TEST_CASE("every check passes at the default sweep bounds") {
  const auto results = run_verification(Suite::All, VerifyLimits{});
  CHECK(results.size() >= 40);
  for (const auto& r : results) {
    INFO(r.suite << " / " << r.name << ": " << r.counterexample);
    CHECK(r.passed);
    CHECK(r.instances > 0);
    CHECK(r.n_min <= r.n_max);
  }
  const auto report = format_report(results);
  const auto total = std::to_string(results.size());
  CHECK(report.find(total + "/" + total + " checks passed") != std::string::npos);
}

TEST_CASE("suites partition the full run") {
  VerifyLimits small;
  small.max_n = 4;
  std::size_t sum = 0;
  for (Suite s : {Suite::Order, Suite::Counts, Suite::Sperner, Suite::Butterfly, Suite::Below}) {
    const auto part = run_verification(s, small);
    CHECK_FALSE(part.empty());
    for (const auto& r : part) CHECK(r.suite == to_string(s));
    sum += part.size();
  }
  CHECK(sum == run_verification(Suite::All, small).size());
}

TEST_CASE("reports carry the edge tallies") {
  VerifyLimits limits;
  limits.max_n = 7;
  const auto results = run_verification(Suite::Counts, limits);
  const auto it = std::find_if(results.begin(), results.end(), [](const CheckResult& r) {
    return r.name.find("edge count") != std::string::npos;
  });
  REQUIRE(it != results.end());
  CHECK(std::find(it->notes.begin(), it->notes.end(), "n=7: 140 edges verified") !=
        it->notes.end());
}

TEST_CASE("a failing check renders its counterexample") {
  CheckResult bad;
  bad.suite = "counts";
  bad.name = "demo";
  bad.passed = false;
  bad.instances = 3;
  bad.n_min = 2;
  bad.n_max = 4;
  bad.counterexample = "(1,1,1,1)@2";
  const auto report = format_report({bad});
  CHECK(report.find("FAIL") != std::string::npos);
  CHECK(report.find("(1,1,1,1)@2") != std::string::npos);
  CHECK(report.find("0/1 checks passed") != std::string::npos);
}
