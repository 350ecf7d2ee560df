#ifndef QUATSPLIT_ORACLE_HPP
#define QUATSPLIT_ORACLE_HPP

#include <variant>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "field.hpp"
#include "hilbert.hpp"
#include "quadratic.hpp"
#include "verdict.hpp"

// Independent local-global decision. A quaternion algebra over Q stays
// ramified at a place of a Galois field K exactly when the local degree of K
// there is odd, and H_K is a division algebra iff it ramifies somewhere.
// Nothing here consults the closed-form criteria in classify.hpp.

namespace quatsplit {

namespace detail {

inline i64 cyclotomic_local_degree(i64 n, const Place& v) {
    if (v.is_infinite()) {
        return 2;
    }
    const i64 p = v.prime().value();
    i64 prime_power = 1;
    i64 rest = n;
    while (rest % p == 0) {
        rest /= p;
        prime_power *= p;
    }
    const i64 residual = rest <= 2 ? 1 : multiplicative_order(p, rest);
    return checked_mul(euler_phi(prime_power), residual);
}

inline i64 quadratic_local_degree(i64 d, const Place& v) {
    if (v.is_infinite()) {
        return d < 0 ? 2 : 1;
    }
    return splitting_type(v.prime(), make_quadratic(d)) == SplittingType::Split ? 1 : 2;
}

// Galois group V4: the decomposition group has order 4 / (1 + #subfields where v splits).
// Splitting in exactly two of the three quadratic subfields is impossible.
inline i64 biquadratic_local_degree(i64 d1, i64 d2, const Place& v) {
    const i64 d3 = squarefree_part(checked_mul(d1, d2));
    int split_count = 0;
    for (i64 d : {d1, d2, d3}) {
        if (quadratic_local_degree(d, v) == 1) {
            ++split_count;
        }
    }
    if (split_count == 2) {
        throw Error(Errc::InvalidArgument, "inconsistent splitting in Q(sqrt " +
                                               std::to_string(d1) + ", sqrt " +
                                               std::to_string(d2) + ") at " + v.to_string());
    }
    return 4 / (1 + split_count);
}

}

/// Degree of the completion of K above the rational place v.
/// Kummer fields are rejected: their local degrees depend on the radicand.
inline i64 local_degree(const FieldDescriptor& field, const Place& v) {
    struct Visitor {
        const Place& v;
        i64 operator()(const RationalField&) const { return 1; }
        i64 operator()(const QuadraticBase& f) const {
            return detail::quadratic_local_degree(f.d, v);
        }
        i64 operator()(const BiquadraticBase& f) const {
            return detail::biquadratic_local_degree(f.d1, f.d2, v);
        }
        i64 operator()(const CyclotomicBase& f) const {
            return detail::cyclotomic_local_degree(f.n, v);
        }
        i64 operator()(const KummerBase&) const {
            throw Error(Errc::UnsupportedField, "Kummer local degrees depend on the radicand");
        }
    };
    return std::visit(Visitor{v}, field);
}

/// Division iff some ramified place of H_Q(p, q) has odd local degree in K.
inline Outcome division_oracle(const FieldDescriptor& field, Prime p, Prime q) {
    if (p == q) {
        throw Error(Errc::EqualPrimes, "H(p, p) needs two distinct primes");
    }
    // For a Kummer field L over Q(xi_{l^k}), [L : Q(xi)] divides l^k, so every
    // local degree of L has the parity of the cyclotomic one below it.
    FieldDescriptor parity_field = field;
    if (const auto* k = std::get_if<KummerBase>(&field)) {
        parity_field = CyclotomicBase{checked_pow(k->l, k->k)};
    }
    const RamificationData ram = ramified_places(p.value(), q.value());
    for (const Place& v : ram.ramified) {
        if (local_degree(parity_field, v) % 2 == 1) {
            return Outcome::Division;
        }
    }
    return Outcome::Split;
}

}

#endif
