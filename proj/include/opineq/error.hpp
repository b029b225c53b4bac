#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opineq {

enum class ErrorCode {
    NonHermitianInput,
    ConvergenceFailure,
    SingularMatrix,
    NotPositiveDefinite,
    DomainError,
    PoleError,
    InvalidParameter,
    ShapeMismatch,
    SizeLimit,
    UnknownFunction,
    UnknownCase,
    SignatureMismatch,
    NoWitness,
    ParseError,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::UnknownCase: return "UnknownCase";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Single exception type for the library; `code()` discriminates the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace opineq
