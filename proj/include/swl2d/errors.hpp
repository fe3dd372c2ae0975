#pragma once

#include <stdexcept>
#include <string>

namespace swl2d {

enum class ErrorCode {
    DegenerateOrdering,
    HypothesesViolated,
    DomainError,
    DegenerateQ,
    NoRotation,
    NotGues,
    NoConvergence,
    SubcaseUnsupported,
    RootBracketFailure,
    ConvexityFailure,
    EscalationExceeded,
    SolverCycle,
    SignalGap,
    BracketFailure,
    InvalidInput,
};

class SwlError : public std::runtime_error {
public:
    SwlError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DegenerateOrdering: return "DegenerateOrdering";
        case ErrorCode::HypothesesViolated: return "HypothesesViolated";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::DegenerateQ: return "DegenerateQ";
        case ErrorCode::NoRotation: return "NoRotation";
        case ErrorCode::NotGues: return "NotGues";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::SubcaseUnsupported: return "SubcaseUnsupported";
        case ErrorCode::RootBracketFailure: return "RootBracketFailure";
        case ErrorCode::ConvexityFailure: return "ConvexityFailure";
        case ErrorCode::EscalationExceeded: return "EscalationExceeded";
        case ErrorCode::SolverCycle: return "SolverCycle";
        case ErrorCode::SignalGap: return "SignalGap";
        case ErrorCode::BracketFailure: return "BracketFailure";
        case ErrorCode::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

}  // namespace swl2d
