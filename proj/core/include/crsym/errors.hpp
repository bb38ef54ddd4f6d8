#pragma once

#include <stdexcept>
#include <string>

namespace crsym {

// Error taxonomy shared by the library and the CLI. Each class maps to a
// stable process exit code (see tools/).
enum class ErrorCode {
    SyntaxError = 2,
    RealityViolation = 3,
    NotPrepared = 4,
    NotFiniteType = 5,
    NotCircular = 6,
    ModelSurface = 7,
    OutOfScope = 8,
    RankDefect = 9,
    NonAffine = 10,
    NotSpecialNormalized = 11,
    SingularLinearPart = 12,
    NormalizationViolation = 13,
    DomainError = 14,
    NotNormalized = 15,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::RealityViolation: return "RealityViolation";
        case ErrorCode::NotPrepared: return "NotPrepared";
        case ErrorCode::NotFiniteType: return "NotFiniteType";
        case ErrorCode::NotCircular: return "NotCircular";
        case ErrorCode::ModelSurface: return "ModelSurface";
        case ErrorCode::OutOfScope: return "OutOfScope";
        case ErrorCode::RankDefect: return "RankDefect";
        case ErrorCode::NonAffine: return "NonAffine";
        case ErrorCode::NotSpecialNormalized: return "NotSpecialNormalized";
        case ErrorCode::SingularLinearPart: return "SingularLinearPart";
        case ErrorCode::NormalizationViolation: return "NormalizationViolation";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::NotNormalized: return "NotNormalized";
    }
    return "UnknownError";
}

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_name(code)) + ": " + what);
}

}  // namespace crsym
