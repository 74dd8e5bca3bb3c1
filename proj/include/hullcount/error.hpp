#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hullcount {

enum class ErrorKind {
  NonPrime,
  DegreeTooLarge,
  BadSubfieldOrder,
  OddAmbientForSymplectic,
  FieldNotASquareForHermitian,
  RankDeficientGenerator,
  DimensionMismatch,
  BadRange,
  BadIndex,
  OutOfValidRange,
  ParityViolation,
  EvenCharacteristic,
  BadRegime,
  WorkLimitExceeded,
  OddGramRank,
  NotBinaryField,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for every precondition failure in the library.
/// `kind()` is stable and meant for programmatic checks; `what()` carries
/// the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hullcount
