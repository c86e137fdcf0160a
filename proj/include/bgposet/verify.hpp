#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bgposet {

enum class Suite { All, Order, Counts, Sperner, Butterfly, Below };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct VerifyLimits {
  int max_n = 7;                   // sweeps over BG_n run for n <= max_n
  int permutation_max_n = 6;       // sweeps over all of S_n
  int reduction_oracle_max_n = 8;  // cap passed to the reduction oracle
};

/// Outcome of one property check across its whole sweep. Only the first
/// failing instance is recorded; sweeps run in increasing n and canonical
/// element order, so that instance is the smallest one.
struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::uint64_t instances = 0;
  int n_min = 0;
  int n_max = 0;
  std::string counterexample;
  std::vector<std::string> notes;
};

std::vector<CheckResult> run_verification(Suite suite, const VerifyLimits& limits);

/// Human-readable report: one PASS/FAIL line per check plus its notes.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace bgposet
