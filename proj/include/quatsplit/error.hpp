#ifndef QUATSPLIT_ERROR_HPP
#define QUATSPLIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace quatsplit {

enum class Errc {
    InvalidArgument,
    NotPrime,
    Overflow,
    NonSquarefree,
    DisallowedValue,
    EqualPrimes,
    UnsupportedField,
    BadModulus,
    OutOfScope,
};

inline std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::NotPrime: return "NotPrime";
        case Errc::Overflow: return "Overflow";
        case Errc::NonSquarefree: return "NonSquarefree";
        case Errc::DisallowedValue: return "DisallowedValue";
        case Errc::EqualPrimes: return "EqualPrimes";
        case Errc::UnsupportedField: return "UnsupportedField";
        case Errc::BadModulus: return "BadModulus";
        case Errc::OutOfScope: return "OutOfScope";
    }
    return "Unknown";
}

/// Every precondition violation in the library is reported with one of these.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}

#endif
