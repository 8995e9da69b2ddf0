#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace azinv {

enum class ErrorCode {
  kParse = 1,
  kRingMismatch,
  kNotInvertible,
  kUnsupported,
  kCharacteristicTwo,
  kNotNormOne,
  kHypothesisViolated,
  kOddDimensionAlternating,
  kInvalidGram,
  kNotInner,
  kNotRamificationPoint,
  kDimensionAnomaly,
  kFixedRingNotField,
  kInvalidArgument,
  kVerificationFailed,
  kNotHermitian,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries a printable certificate of non-invertibility: a nonzero cofactor y
// with a*y = 0, or the offending support of a Laurent element.
class NotInvertibleError : public Error {
 public:
  NotInvertibleError(const std::string& message, std::string witness)
      : Error(ErrorCode::kNotInvertible, message), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorCode::kParse, message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace azinv
