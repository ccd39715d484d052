#ifndef FQLC_ERRORS_HPP
#define FQLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fqlc {

/// Stable error codes, mirrored verbatim by the CLI's diagnostics.
enum class ErrorCode {
    NotPrime,
    NotIrreducible,
    NotMonic,
    NotSquarefree,
    SizeOverflow,
    DivisionByZero,
    LevelMismatch,
    TowerMismatch,
    NotInSubfield,
    ZeroPolynomial,
    BothZero,
    BadInput,
    BadStateLength,
    NotCoprime,
    NotCharacteristic,
    PrefixTooShort,
    EnumerationTooLarge,
    NotAdmissible,
    MissingFlag,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code),
          message_(message) {}

    ErrorCode code() const { return code_; }
    const std::string& message() const { return message_; }

  private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) raise(code, message);
}

}  // namespace fqlc

#endif
