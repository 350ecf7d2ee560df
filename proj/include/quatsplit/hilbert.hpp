#ifndef QUATSPLIT_HILBERT_HPP
#define QUATSPLIT_HILBERT_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"

namespace quatsplit {

/// A place of Q: a finite prime or the real place.
class Place {
public:
    static Place finite(Prime p) { return Place(p.value()); }
    static Place infinite() { return Place(0); }

    bool is_infinite() const noexcept { return prime_ == 0; }
    /// The prime of a finite place.
    Prime prime() const {
        if (is_infinite()) {
            throw Error(Errc::InvalidArgument, "the infinite place has no prime");
        }
        return Prime(prime_);
    }

    std::string to_string() const { return is_infinite() ? "inf" : std::to_string(prime_); }

    friend bool operator==(const Place&, const Place&) = default;
    /// Finite places ascending, the infinite place last.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_infinite() <=> b.is_infinite();
        }
        return a.prime_ <=> b.prime_;
    }

private:
    explicit Place(i64 prime) : prime_(prime) {}
    i64 prime_;
};

namespace detail {

struct Valuation {
    int exponent;
    i64 unit;
};

inline Valuation split_valuation(i64 a, i64 p) {
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return {v, a};
}

// (u - 1)/2 and (u^2 - 1)/8 mod 2 for an odd 2-adic unit, via its class mod 8.
inline int epsilon(i64 u) { return mod(u, 4) == 3 ? 1 : 0; }
inline int omega(i64 u) {
    const i64 r = mod(u, 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

}

/// Local Hilbert symbol (a, b)_v: +1 iff H(a, b) splits over the completion of Q at v.
inline int hilbert_symbol(i64 a, i64 b, const Place& v) {
    if (a == 0 || b == 0) {
        throw Error(Errc::InvalidArgument, "Hilbert symbol needs nonzero arguments");
    }
    if (v.is_infinite()) {
        return (a < 0 && b < 0) ? -1 : 1;
    }
    const i64 p = v.prime().value();
    const auto [alpha, u] = detail::split_valuation(a, p);
    const auto [beta, w] = detail::split_valuation(b, p);
    if (p == 2) {
        const int exponent = detail::epsilon(u) * detail::epsilon(w) + alpha * detail::omega(w) +
                             beta * detail::omega(u);
        return exponent % 2 == 0 ? 1 : -1;
    }
    const Prime prime(p);
    int sign = 1;
    if ((static_cast<i64>(alpha) * beta) % 2 == 1 && mod(p, 4) == 3) {
        sign = -sign;
    }
    if (beta % 2 == 1) {
        sign *= legendre(u, prime);
    }
    if (alpha % 2 == 1) {
        sign *= legendre(w, prime);
    }
    return sign;
}

struct RamificationData {
    /// Places where the Hilbert symbol is -1, in Place order.
    std::vector<Place> ramified;
    /// Product of the finite ramified primes.
    i64 reduced_discriminant = 1;

    bool splits_over_q() const { return ramified.empty(); }
    friend bool operator==(const RamificationData&, const RamificationData&) = default;
};

/// Evaluates the symbol at the real place and at every prime dividing 2ab;
/// no other place can ramify.
inline RamificationData ramified_places(i64 a, i64 b) {
    if (a == 0 || b == 0) {
        throw Error(Errc::InvalidArgument, "ramified_places needs nonzero arguments");
    }
    auto magnitude = [](i64 x) {
        return x < 0 ? static_cast<u64>(-(x + 1)) + 1 : static_cast<u64>(x);
    };
    std::vector<u64> candidates{2};
    for (i64 x : {a, b}) {
        for (const auto& [p, e] : factorize(magnitude(x))) {
            candidates.push_back(p);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    RamificationData out;
    for (u64 p : candidates) {
        const Place place = Place::finite(Prime(static_cast<i64>(p)));
        if (hilbert_symbol(a, b, place) == -1) {
            out.ramified.push_back(place);
            out.reduced_discriminant = checked_mul(out.reduced_discriminant, static_cast<i64>(p));
        }
    }
    if (hilbert_symbol(a, b, Place::infinite()) == -1) {
        out.ramified.push_back(Place::infinite());
    }
    return out;
}

/// Closed-form discriminant of H_Q(p, q) for the three classical congruence
/// cases, in the argument order given; nullopt when no case applies.
///   p = q = 3 (mod 4), (q/p) != 1       -> 2p
///   q = 2, p = 3 (mod 8)                -> 2p
///   p or q = 1 (mod 4), (p/q) = -1      -> pq   (q odd, so the symbol is defined)
inline std::optional<i64> discriminant_fast_path(Prime p, Prime q) {
    if (p == q) {
        throw Error(Errc::EqualPrimes, "discriminant fast path needs distinct primes");
    }
    const i64 pv = p.value();
    const i64 qv = q.value();
    if (p.is_odd() && q.is_odd() && mod(pv, 4) == 3 && mod(qv, 4) == 3 && legendre(qv, p) != 1) {
        return checked_mul(2, pv);
    }
    if (qv == 2 && mod(pv, 8) == 3) {
        return checked_mul(2, pv);
    }
    if (q.is_odd() && (mod(pv, 4) == 1 || mod(qv, 4) == 1) && legendre(pv, q) == -1) {
        return checked_mul(pv, qv);
    }
    return std::nullopt;
}

/// H(p, q) and H(q, p) are isomorphic, so either argument order may be used.
inline std::optional<i64> discriminant_fast_path_either_order(Prime p, Prime q) {
    if (auto d = discriminant_fast_path(p, q)) {
        return d;
    }
    return discriminant_fast_path(q, p);
}

}

#endif
