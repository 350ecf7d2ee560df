#ifndef QUATSPLIT_CYCLOTOMIC_HPP
#define QUATSPLIT_CYCLOTOMIC_HPP

#include <optional>

#include "arith.hpp"

namespace quatsplit {

/// Q(xi_{2m}) = Q(xi_m) for odd m, so n = 2 (mod 4) is halved.
inline i64 canonical_n(i64 n) {
    if (n < 3) {
        throw Error(Errc::InvalidArgument, "cyclotomic order must be >= 3, got " + std::to_string(n));
    }
    return mod(n, 4) == 2 ? n / 2 : n;
}

struct CyclotomicField {
    i64 n;
    i64 degree;

    friend bool operator==(const CyclotomicField&, const CyclotomicField&) = default;
};

inline CyclotomicField make_cyclotomic(i64 n) {
    const i64 canon = canonical_n(n);
    return {canon, euler_phi(canon)};
}

/// Ramification index e, residual degree f and number of primes g above p in Z[xi_n].
struct FactorizationShape {
    i64 e;
    i64 f;
    i64 g;

    friend bool operator==(const FactorizationShape&, const FactorizationShape&) = default;
};

inline FactorizationShape factorization_shape(Prime p, i64 n) {
    if (n < 3) {
        throw Error(Errc::InvalidArgument, "cyclotomic order must be >= 3");
    }
    const i64 prime = p.value();
    i64 prime_power = 1;
    i64 rest = n;
    while (rest % prime == 0) {
        rest /= prime;
        prime_power *= prime;
    }
    const i64 e = euler_phi(prime_power);
    const i64 f = rest <= 2 ? 1 : multiplicative_order(prime, rest);
    return {e, f, euler_phi(n) / (e * f)};
}

inline bool splits_completely(Prime p, i64 n) {
    return mod(p.value(), n) == 1 % n;
}

/// d with Q(sqrt d) the unique quadratic subfield of Q(xi_p): +p or -p by p mod 4.
inline i64 quadratic_subfield(Prime p) {
    if (!p.is_odd()) {
        throw Error(Errc::InvalidArgument, "quadratic subfield needs an odd prime");
    }
    return mod(p.value(), 4) == 1 ? p.value() : -p.value();
}

inline i64 maximal_real_subfield_degree(i64 n) {
    return euler_phi(canonical_n(n)) / 2;
}

struct PrimePower {
    i64 prime;
    int exponent;
};

/// n = l^k with l prime, if it is one.
inline std::optional<PrimePower> as_prime_power(i64 n) {
    if (n < 2) {
        return std::nullopt;
    }
    const auto factors = factorize(static_cast<u64>(n));
    if (factors.size() != 1) {
        return std::nullopt;
    }
    return PrimePower{static_cast<i64>(factors.front().first), factors.front().second};
}

}

#endif
