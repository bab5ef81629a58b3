#include "pavi/error.hpp"

namespace pavi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::BadCharacter: return "BadCharacter";
    case ErrorCode::BelowAxis: return "BelowAxis";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::ReservationConflict: return "ReservationConflict";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::NegativePowerResidue: return "NegativePowerResidue";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
  }
  return "Unknown";
}

}  // namespace pavi
