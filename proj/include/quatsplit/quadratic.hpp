#ifndef QUATSPLIT_QUADRATIC_HPP
#define QUATSPLIT_QUADRATIC_HPP

#include <string>
#include <string_view>

#include "arith.hpp"

namespace quatsplit {

/// Q(sqrt d) for squarefree d not in {0, 1}.
class QuadraticField {
public:
    i64 d() const noexcept { return d_; }
    /// d when d = 1 (mod 4), otherwise 4d.
    i64 discriminant() const noexcept { return discriminant_; }

    friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

private:
    friend QuadraticField make_quadratic(i64 d);
    QuadraticField(i64 d, i64 disc) : d_(d), discriminant_(disc) {}

    i64 d_;
    i64 discriminant_;
};

inline QuadraticField make_quadratic(i64 d) {
    if (d == 0 || d == 1) {
        throw Error(Errc::DisallowedValue, "quadratic field needs d not in {0, 1}, got " +
                                               std::to_string(d));
    }
    if (!is_squarefree(d)) {
        throw Error(Errc::NonSquarefree, std::to_string(d) + " is not squarefree");
    }
    const i64 disc = mod(d, 4) == 1 ? d : checked_mul(4, d);
    return QuadraticField(d, disc);
}

enum class SplittingType { Ramified, Split, Inert };

inline std::string_view to_string(SplittingType t) {
    switch (t) {
        case SplittingType::Ramified: return "Ramified";
        case SplittingType::Split: return "Split";
        case SplittingType::Inert: return "Inert";
    }
    return "?";
}

inline SplittingType splitting_type(Prime p, const QuadraticField& field) {
    if (p.is_odd()) {
        switch (legendre(field.discriminant(), p)) {
            case 0: return SplittingType::Ramified;
            case 1: return SplittingType::Split;
            default: return SplittingType::Inert;
        }
    }
    switch (mod(field.d(), 8)) {
        case 1: return SplittingType::Split;
        case 5: return SplittingType::Inert;
        default: return SplittingType::Ramified;  // d = 2, 3 (mod 4)
    }
}

}

#endif
