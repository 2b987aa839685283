#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class ErrorKind {
  kIndeterminateFloor,
  kIndeterminateComparison,
  kNonPositiveState,
  kEmptyInput,
  kNonPositiveEntry,
  kDepthExceeded,
  kRankMismatch,
  kNotUnimodular,
  kNonInvertibleLeadingEntry,
  kFrameMismatch,
  kFieldMismatch,
  kInvalidGenus,
  kNoCommonTail,
  kNonPositiveImage,
  kUnknownGenerator,
  kDivisionByZero,
  kInvalidArgument,
  kParseError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// True for failures caused by undecidable interval arithmetic.
inline bool is_indeterminate(ErrorKind kind) {
  return kind == ErrorKind::kIndeterminateFloor ||
         kind == ErrorKind::kIndeterminateComparison;
}

}  // namespace toric
