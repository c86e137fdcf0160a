#include "bgposet/count.hpp"
#include "bgposet/error.hpp"

namespace bgposet {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NotBigrassmannian: return "NotBigrassmannian";
    case ErrorCode::InvalidLengthVector: return "InvalidLengthVector";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::EmptyTargetSet: return "EmptyTargetSet";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Count power(std::int64_t base, unsigned exp) {
  return boost::multiprecision::pow(Count(base), exp);
}

}  // namespace bgposet
