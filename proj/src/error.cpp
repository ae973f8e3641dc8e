#include "goncarov/error.hpp"

namespace gonc {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::NotADeltaIndicator: return "NotADeltaIndicator";
    case ErrorCode::NonScalarLeadingCoefficient: return "NonScalarLeadingCoefficient";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::NotRefinement: return "NotRefinement";
    case ErrorCode::GridTooShort: return "GridTooShort";
    case ErrorCode::NotBinomialType: return "NotBinomialType";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::UnknownCheck: return "UnknownCheck";
    case ErrorCode::InternalCrossCheckFailure: return "InternalCrossCheckFailure";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace gonc
