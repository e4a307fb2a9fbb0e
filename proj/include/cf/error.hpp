#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cf {

enum class ErrorCode {
  TableShape,
  ClosureViolation,
  NoIdentity,
  WrongIdentity,
  MissingInverse,
  NonAssociative,
  DuplicateLabel,
  UnknownKind,
  UnknownLabel,
  IndexOutOfRange,
  GroupTooLarge,
  LengthMismatch,
  SourceTargetMismatch,
  NotBijective,
  NotAutomorphism,
  NonDistinctAssignment,
  ConflictingPairs,
  UnsatisfiableConstraint,
  NonCommutativeGroup,
  SyntaxError,
  InconsistentRule,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported as a cf::Error. `witness` holds the
/// offending element indices (e.g. the non-associative triple) and
/// `position` the byte offset into parsed text, when either applies.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message,
        std::vector<std::size_t> witness = {},
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t> &witness() const noexcept { return witness_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
  std::optional<std::size_t> position_;
};

} // namespace cf
