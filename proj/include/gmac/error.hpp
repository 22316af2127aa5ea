#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmac {

enum class ErrorKind {
  DimensionMismatch,
  NegativeProbability,
  RowSumViolation,
  UnknownVariable,
  InvalidInput,
  EmptySlice,
  SolverStall,
  GridTooLarge,
  EnumerationTooLarge,
  VertexEnumerationOverflow,
  PieceExplosion,
  Unbounded,
  Internal,
};

// Coarse grouping used for CLI exit codes.
enum class ErrorCategory { Validation, ResourceGuard, Internal };

std::string_view error_name(ErrorKind kind) noexcept;
ErrorCategory error_category(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return error_category(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace gmac
