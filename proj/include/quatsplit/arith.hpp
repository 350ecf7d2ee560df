#ifndef QUATSPLIT_ARITH_HPP
#define QUATSPLIT_ARITH_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace quatsplit {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Product of two signed 64-bit values; throws on overflow instead of wrapping.
inline i64 checked_mul(i64 a, i64 b) {
    i64 out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(Errc::Overflow, std::to_string(a) + " * " + std::to_string(b));
    }
    return out;
}

/// Least non-negative residue of a modulo m (m > 0).
constexpr i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

constexpr u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

constexpr u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) {
        return 0;
    }
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Deterministic Miller-Rabin. The first twelve primes as witnesses are
/// sufficient for every n < 3.3e24, so the full 64-bit range is covered.
constexpr bool is_prime(u64 n) {
    if (n < 2) {
        return false;
    }
    constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : witnesses) {
        if (n % w == 0) {
            return n == w;
        }
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 w : witnesses) {
        u64 x = powmod(w, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

/// A positive rational prime. Construction certifies primality.
class Prime {
public:
    explicit Prime(i64 value) : value_(value) {
        if (value < 2 || !is_prime(static_cast<u64>(value))) {
            throw Error(Errc::NotPrime, std::to_string(value) + " is not a positive prime");
        }
    }

    constexpr i64 value() const noexcept { return value_; }
    constexpr bool is_odd() const noexcept { return value_ != 2; }

    friend constexpr auto operator<=>(const Prime&, const Prime&) = default;

private:
    i64 value_;
};

/// Prime factorization of |n| by trial division, ascending primes with exponents.
/// Inputs here are small; this is not meant for large composites.
inline std::vector<std::pair<u64, int>> factorize(u64 n) {
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        out.emplace_back(n, 1);
    }
    return out;
}

inline bool is_squarefree(i64 n) {
    if (n == 0) {
        return false;
    }
    u64 magnitude = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    for (const auto& [p, e] : factorize(magnitude)) {
        if (e > 1) {
            return false;
        }
    }
    return true;
}

/// Sign times the product of primes occurring to odd power in n.
inline i64 squarefree_part(i64 n) {
    if (n == 0) {
        throw Error(Errc::InvalidArgument, "squarefree part of 0");
    }
    i64 out = n < 0 ? -1 : 1;
    u64 magnitude = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    for (const auto& [p, e] : factorize(magnitude)) {
        if (e % 2 == 1) {
            out = checked_mul(out, static_cast<i64>(p));
        }
    }
    return out;
}

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
inline int legendre(i64 a, Prime p) {
    if (!p.is_odd()) {
        throw Error(Errc::InvalidArgument, "Legendre symbol needs an odd prime modulus");
    }
    const auto m = static_cast<u64>(p.value());
    const auto r = static_cast<u64>(mod(a, p.value()));
    if (r == 0) {
        return 0;
    }
    return powmod(r, (m - 1) / 2, m) == 1 ? 1 : -1;
}

inline int legendre(i64 a, i64 p) { return legendre(a, Prime(p)); }

inline i64 euler_phi(i64 n) {
    if (n < 1) {
        throw Error(Errc::InvalidArgument, "euler_phi needs n >= 1");
    }
    i64 result = n;
    for (const auto& [p, e] : factorize(static_cast<u64>(n))) {
        result = result / static_cast<i64>(p) * (static_cast<i64>(p) - 1);
    }
    return result;
}

/// Smallest f >= 1 with a^f = 1 (mod n). Found by stripping prime factors off phi(n).
inline i64 multiplicative_order(i64 a, i64 n) {
    if (n < 2) {
        throw Error(Errc::InvalidArgument, "multiplicative_order needs n >= 2");
    }
    const i64 residue = mod(a, n);
    if (std::gcd(residue, n) != 1) {
        throw Error(Errc::InvalidArgument,
                    "gcd(" + std::to_string(a) + ", " + std::to_string(n) + ") != 1");
    }
    const auto base = static_cast<u64>(residue);
    const auto modulus = static_cast<u64>(n);
    i64 order = euler_phi(n);
    for (const auto& [r, e] : factorize(static_cast<u64>(order))) {
        const auto q = static_cast<i64>(r);
        while (order % q == 0 && powmod(base, static_cast<u64>(order / q), modulus) == 1) {
            order /= q;
        }
    }
    return order;
}

inline i64 checked_pow(i64 base, int exponent) {
    i64 out = 1;
    for (int i = 0; i < exponent; ++i) {
        out = checked_mul(out, base);
    }
    return out;
}

/// All primes <= limit, ascending.
inline std::vector<i64> primes_up_to(i64 limit) {
    std::vector<i64> out;
    if (limit < 2) {
        return out;
    }
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (i64 i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) {
            continue;
        }
        out.push_back(i);
        for (i64 j = i * i; j <= limit; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }
    return out;
}

}

#endif
