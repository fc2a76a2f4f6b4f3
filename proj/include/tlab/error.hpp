#pragma once

#include <stdexcept>
#include <string>

namespace tlab {

enum class Errc {
    ParseError,
    UniverseTooLarge,
    InvalidSpec,
    CombinedUniverseTooLarge,
    OutOfValidity,
    NegativeResult,
    NoPropertyFound,
    PreconditionTauMismatch,
    TypeMismatch,
    TooLarge,
    SeedMismatch,
    UnknownTheta,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::UniverseTooLarge: return "UniverseTooLarge";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::CombinedUniverseTooLarge: return "CombinedUniverseTooLarge";
    case Errc::OutOfValidity: return "OutOfValidity";
    case Errc::NegativeResult: return "NegativeResult";
    case Errc::NoPropertyFound: return "NoPropertyFound";
    case Errc::PreconditionTauMismatch: return "PreconditionTauMismatch";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SeedMismatch: return "SeedMismatch";
    case Errc::UnknownTheta: return "UnknownTheta";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace tlab
