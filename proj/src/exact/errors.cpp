#include "exact/errors.hpp"

namespace azinv {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kRingMismatch: return "RingMismatch";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kCharacteristicTwo: return "CharacteristicTwoObstruction";
    case ErrorCode::kNotNormOne: return "NotNormOne";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kOddDimensionAlternating: return "OddDimensionAlternating";
    case ErrorCode::kInvalidGram: return "InvalidGram";
    case ErrorCode::kNotInner: return "NotInner";
    case ErrorCode::kNotRamificationPoint: return "NotRamificationPoint";
    case ErrorCode::kDimensionAnomaly: return "DimensionAnomaly";
    case ErrorCode::kFixedRingNotField: return "FixedRingNotField";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kNotHermitian: return "NotHermitian";
  }
  return "Unknown";
}

}  // namespace azinv
