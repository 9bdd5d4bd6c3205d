#ifndef ALTSURG_ERRORS_HPP
#define ALTSURG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace altsurg {

enum class ErrorCode {
    EmptyInput,
    NormalizationError,
    NotLSpaceForm,
    OutOfRange,
    EmptyStableCoefficients,
    SlopeTooSmall,
    InvalidSlope,
    RankMismatch,
    NotSpanning,
    PositivePairing,
    NonzeroSum,
    VectorNotInLattice,
    CoordinateOutOfRange,
    IndexOutOfRange,
    SearchSpaceOverflow,
    PrerequisiteMissing,
    NotPlanar,
    PreconditionViolation,
    Overflow,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::NormalizationError: return "NormalizationError";
        case ErrorCode::NotLSpaceForm: return "NotLSpaceForm";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::EmptyStableCoefficients: return "EmptyStableCoefficients";
        case ErrorCode::SlopeTooSmall: return "SlopeTooSmall";
        case ErrorCode::InvalidSlope: return "InvalidSlope";
        case ErrorCode::RankMismatch: return "RankMismatch";
        case ErrorCode::NotSpanning: return "NotSpanning";
        case ErrorCode::PositivePairing: return "PositivePairing";
        case ErrorCode::NonzeroSum: return "NonzeroSum";
        case ErrorCode::VectorNotInLattice: return "VectorNotInLattice";
        case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::SearchSpaceOverflow: return "SearchSpaceOverflow";
        case ErrorCode::PrerequisiteMissing: return "PrerequisiteMissing";
        case ErrorCode::NotPlanar: return "NotPlanar";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

} // namespace altsurg

#endif
