#include "gmac/error.hpp"

namespace gmac {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeProbability: return "NegativeProbability";
    case ErrorKind::RowSumViolation: return "RowSumViolation";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EmptySlice: return "EmptySlice";
    case ErrorKind::SolverStall: return "SolverStall";
    case ErrorKind::GridTooLarge: return "GridTooLarge";
    case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::VertexEnumerationOverflow: return "VertexEnumerationOverflow";
    case ErrorKind::PieceExplosion: return "PieceExplosion";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

ErrorCategory error_category(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NegativeProbability:
    case ErrorKind::RowSumViolation:
    case ErrorKind::UnknownVariable:
    case ErrorKind::InvalidInput:
    case ErrorKind::EmptySlice:
      return ErrorCategory::Validation;
    case ErrorKind::SolverStall:
    case ErrorKind::GridTooLarge:
    case ErrorKind::EnumerationTooLarge:
    case ErrorKind::VertexEnumerationOverflow:
    case ErrorKind::PieceExplosion:
      return ErrorCategory::ResourceGuard;
    case ErrorKind::Unbounded:
    case ErrorKind::Internal:
      return ErrorCategory::Internal;
  }
  return ErrorCategory::Internal;
}

}  // namespace gmac
