#pragma once

#include <stdexcept>
#include <string>

namespace diskiso {

enum class ErrorKind {
    DegenerateInput,
    PerturbationFailed,
    RayDegeneracy,
    NotSeparated,
    NoPath,
    PiConstructionFailed,
    NoPieceCycle,
    InvalidInstance,
    InternalError,
    Uncoverable,
    TooLarge,
    ResolutionExhausted,
    ParseError,
    GenerationFailed,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI
/// in particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::PerturbationFailed: return "PerturbationFailed";
    case ErrorKind::RayDegeneracy: return "RayDegeneracy";
    case ErrorKind::NotSeparated: return "NotSeparated";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::PiConstructionFailed: return "PiConstructionFailed";
    case ErrorKind::NoPieceCycle: return "NoPieceCycle";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::Uncoverable: return "Uncoverable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ResolutionExhausted: return "ResolutionExhausted";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    }
    return "Unknown";
}

}  // namespace diskiso
