#ifndef QUATSPLIT_FIELD_HPP
#define QUATSPLIT_FIELD_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <variant>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "quadratic.hpp"

namespace quatsplit {

struct RationalField {
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

struct QuadraticBase {
    i64 d;
    friend bool operator==(const QuadraticBase&, const QuadraticBase&) = default;
};

struct BiquadraticBase {
    i64 d1;
    i64 d2;
    friend bool operator==(const BiquadraticBase&, const BiquadraticBase&) = default;
};

/// Q(xi_n). n is kept as given (>= 3); consumers canonicalize when they need to.
struct CyclotomicBase {
    i64 n;
    friend bool operator==(const CyclotomicBase&, const CyclotomicBase&) = default;
};

/// Q(xi_{l^k}, alpha^{1/l^k}) for prime l = 3 (mod 4). The radicand never
/// influences a verdict, so it is not carried.
struct KummerBase {
    i64 l;
    int k;
    friend bool operator==(const KummerBase&, const KummerBase&) = default;
};

using FieldDescriptor =
    std::variant<RationalField, QuadraticBase, BiquadraticBase, CyclotomicBase, KummerBase>;

inline FieldDescriptor rational() { return RationalField{}; }

inline FieldDescriptor quadratic(i64 d) {
    make_quadratic(d);
    return QuadraticBase{d};
}

inline FieldDescriptor biquadratic(i64 d1, i64 d2) {
    make_quadratic(d1);
    make_quadratic(d2);
    if (d1 == d2) {
        throw Error(Errc::DisallowedValue, "biquadratic field needs d1 != d2");
    }
    return BiquadraticBase{d1, d2};
}

inline FieldDescriptor cyclotomic(i64 n) {
    canonical_n(n);
    return CyclotomicBase{n};
}

inline FieldDescriptor kummer(i64 l, int k) {
    const Prime prime(l);
    if (mod(prime.value(), 4) != 3) {
        throw Error(Errc::BadModulus, "Kummer base needs a prime l = 3 (mod 4), got " +
                                          std::to_string(l));
    }
    if (k < 1) {
        throw Error(Errc::InvalidArgument, "Kummer exponent must be >= 1");
    }
    return KummerBase{l, k};
}

/// Inverse of parse_field_spec.
inline std::string to_spec(const FieldDescriptor& field) {
    struct Visitor {
        std::string operator()(const RationalField&) const { return "rational"; }
        std::string operator()(const QuadraticBase& f) const {
            return "quadratic:" + std::to_string(f.d);
        }
        std::string operator()(const BiquadraticBase& f) const {
            return "biquadratic:" + std::to_string(f.d1) + "," + std::to_string(f.d2);
        }
        std::string operator()(const CyclotomicBase& f) const {
            return "cyclotomic:" + std::to_string(f.n);
        }
        std::string operator()(const KummerBase& f) const {
            return "kummer:" + std::to_string(f.l) + "^" + std::to_string(f.k);
        }
    };
    return std::visit(Visitor{}, field);
}

namespace detail {

template <typename Int>
Int parse_int(std::string_view text, std::string_view spec) {
    Int value{};
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && text.front() == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw Error(Errc::InvalidArgument,
                    "bad integer '" + std::string(text) + "' in field spec '" + std::string(spec) + "'");
    }
    return value;
}

}

/// Grammar: quadratic:<d> | biquadratic:<d1>,<d2> | cyclotomic:<n> | kummer:<l>^<k>
/// (and "rational"). Field-level validation errors propagate from the factories.
inline FieldDescriptor parse_field_spec(std::string_view spec) {
    if (spec == "rational") {
        return rational();
    }
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw Error(Errc::InvalidArgument, "field spec '" + std::string(spec) + "' has no ':'");
    }
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view args = spec.substr(colon + 1);

    if (kind == "quadratic") {
        return quadratic(detail::parse_int<i64>(args, spec));
    }
    if (kind == "biquadratic") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) {
            throw Error(Errc::InvalidArgument, "biquadratic spec needs '<d1>,<d2>'");
        }
        return biquadratic(detail::parse_int<i64>(args.substr(0, comma), spec),
                           detail::parse_int<i64>(args.substr(comma + 1), spec));
    }
    if (kind == "cyclotomic") {
        return cyclotomic(detail::parse_int<i64>(args, spec));
    }
    if (kind == "kummer") {
        const auto caret = args.find('^');
        if (caret == std::string_view::npos) {
            throw Error(Errc::InvalidArgument, "kummer spec needs '<l>^<k>'");
        }
        return kummer(detail::parse_int<i64>(args.substr(0, caret), spec),
                      detail::parse_int<int>(args.substr(caret + 1), spec));
    }
    throw Error(Errc::InvalidArgument, "unknown field kind '" + std::string(kind) + "'");
}

}

#endif
