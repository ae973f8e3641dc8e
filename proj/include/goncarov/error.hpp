#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gonc {

enum class ErrorCode {
    NonzeroConstantTerm,
    NotADeltaIndicator,
    NonScalarLeadingCoefficient,
    InsufficientOrder,
    SizeLimitExceeded,
    GroundSetMismatch,
    NotRefinement,
    GridTooShort,
    NotBinomialType,
    LengthMismatch,
    HypothesisViolated,
    UnknownFamily,
    UnknownCheck,
    InternalCrossCheckFailure,
    ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this exception type; `code()`
// identifies the failure class.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace gonc
