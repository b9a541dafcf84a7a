#pragma once

#include <stdexcept>
#include <string>

namespace lenlab {

enum class Errc {
    GroupMismatch,
    BudgetExceeded,
    TrivialWordInI,
    CapTooSmall,
    DefaultTooSmall,
    InsufficientDomain,
    LengthMismatch,
    EmptyDomain,
    PreconditionFailed,
    ClassNotStabilized,
    ParseError,
    ConfigError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::GroupMismatch: return "GroupMismatch";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::TrivialWordInI: return "TrivialWordInI";
        case Errc::CapTooSmall: return "CapTooSmall";
        case Errc::DefaultTooSmall: return "DefaultTooSmall";
        case Errc::InsufficientDomain: return "InsufficientDomain";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::EmptyDomain: return "EmptyDomain";
        case Errc::PreconditionFailed: return "PreconditionFailed";
        case Errc::ClassNotStabilized: return "ClassNotStabilized";
        case Errc::ParseError: return "ParseError";
        case Errc::ConfigError: return "ConfigError";
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

} // namespace lenlab
