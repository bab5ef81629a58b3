#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pavi {

enum class ErrorCode {
  InvalidPermutation,
  InvalidK,
  LimitExceeded,
  BadCharacter,
  BelowAxis,
  NotClosed,
  NotSymmetric,
  NotAPartition,
  PatternViolation,
  ReservationConflict,
  ZeroLeadingCoefficient,
  BadConstantTerm,
  NegativePowerResidue,
  NonIntegralCoefficient,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pavi
