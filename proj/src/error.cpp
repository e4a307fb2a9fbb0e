#include "cf/error.hpp"

#include <utility>

namespace cf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::TableShape: return "TableShape";
  case ErrorCode::ClosureViolation: return "ClosureViolation";
  case ErrorCode::NoIdentity: return "NoIdentity";
  case ErrorCode::WrongIdentity: return "WrongIdentity";
  case ErrorCode::MissingInverse: return "MissingInverse";
  case ErrorCode::NonAssociative: return "NonAssociative";
  case ErrorCode::DuplicateLabel: return "DuplicateLabel";
  case ErrorCode::UnknownKind: return "UnknownKind";
  case ErrorCode::UnknownLabel: return "UnknownLabel";
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::GroupTooLarge: return "GroupTooLarge";
  case ErrorCode::LengthMismatch: return "LengthMismatch";
  case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
  case ErrorCode::NotBijective: return "NotBijective";
  case ErrorCode::NotAutomorphism: return "NotAutomorphism";
  case ErrorCode::NonDistinctAssignment: return "NonDistinctAssignment";
  case ErrorCode::ConflictingPairs: return "ConflictingPairs";
  case ErrorCode::UnsatisfiableConstraint: return "UnsatisfiableConstraint";
  case ErrorCode::NonCommutativeGroup: return "NonCommutativeGroup";
  case ErrorCode::SyntaxError: return "SyntaxError";
  case ErrorCode::InconsistentRule: return "InconsistentRule";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message,
             std::vector<std::size_t> witness,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code), witness_(std::move(witness)), position_(position) {}

} // namespace cf
