#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wilson {

enum class ErrorCode {
  NotMonic,
  Reducible,
  DegreeZero,
  DegreeTooLarge,
  DegreeMismatch,
  NotPrime,
  NonMaximalOrder,
  ZeroElement,
  NormTooLarge,
  ParseError,
  NoSuchPrimeIndex,
  RingTooLarge,
  NotAPowerOfTwo,
  CompositeModulus,
  JOutOfRange,
  NotAUnit,
  NotUniqueTorsion,
  UniformizerNotFound,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can turn it into a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wilson
