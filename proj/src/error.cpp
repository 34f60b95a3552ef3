#include "aplike/error.hpp"

namespace aplike {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::NonAssociative: return "NonAssociative";
      case ErrorCode::BadIdentity: return "BadIdentity";
      case ErrorCode::GeneratorsDoNotGenerate: return "GeneratorsDoNotGenerate";
      case ErrorCode::OutOfRange: return "OutOfRange";
      case ErrorCode::UnknownLetter: return "UnknownLetter";
      case ErrorCode::BaseMismatch: return "BaseMismatch";
      case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
      case ErrorCode::NotASubmonoid: return "NotASubmonoid";
      case ErrorCode::NotACongruence: return "NotACongruence";
      case ErrorCode::EmptySet: return "EmptySet";
      case ErrorCode::NotAMember: return "NotAMember";
      case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
      case ErrorCode::LabelOverWrongMonoid: return "LabelOverWrongMonoid";
      case ErrorCode::OrderTooLarge: return "OrderTooLarge";
      case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
  }

}  // namespace aplike
