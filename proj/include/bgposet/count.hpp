#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace bgposet {

/// Exact non-negative integer returned by every enumeration formula.
using Count = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, k); zero when k < 0, k > n or n < 0.
Count binomial(std::int64_t n, std::int64_t k);

/// Exact power base^exp for exp >= 0.
Count power(std::int64_t base, unsigned exp);

inline std::string to_string(const Count& c) { return c.str(); }

}  // namespace bgposet
