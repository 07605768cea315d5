#include "wilson/error.hpp"

namespace wilson {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::Reducible: return "Reducible";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NonMaximalOrder: return "NonMaximalOrder";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoSuchPrimeIndex: return "NoSuchPrimeIndex";
    case ErrorCode::RingTooLarge: return "RingTooLarge";
    case ErrorCode::NotAPowerOfTwo: return "NotAPowerOfTwo";
    case ErrorCode::CompositeModulus: return "CompositeModulus";
    case ErrorCode::JOutOfRange: return "JOutOfRange";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotUniqueTorsion: return "NotUniqueTorsion";
    case ErrorCode::UniformizerNotFound: return "UniformizerNotFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace wilson
