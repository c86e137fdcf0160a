#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bgposet {

enum class ErrorCode {
  EmptyInput,
  NotABijection,
  InvalidOrder,
  OrderMismatch,
  SizeLimitExceeded,
  NotBigrassmannian,
  InvalidLengthVector,
  OrderTooSmall,
  LevelOutOfRange,
  NotComparable,
  EmptyTargetSet,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this exception; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bgposet
