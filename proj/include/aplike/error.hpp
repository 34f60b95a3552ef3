#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aplike {

  enum class ErrorCode {
    NonAssociative,
    BadIdentity,
    GeneratorsDoNotGenerate,
    OutOfRange,
    UnknownLetter,
    BaseMismatch,
    SizeLimitExceeded,
    NotASubmonoid,
    NotACongruence,
    EmptySet,
    NotAMember,
    AlphabetMismatch,
    LabelOverWrongMonoid,
    OrderTooLarge,
    InvalidInput,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  //! Every failure raised by the library carries one of the codes above so
  //! front ends can map them onto exit statuses without parsing messages.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace aplike
