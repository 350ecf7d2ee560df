#ifndef QUATSPLIT_CLASSIFY_HPP
#define QUATSPLIT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "field.hpp"
#include "quadratic.hpp"
#include "verdict.hpp"

namespace quatsplit {

namespace detail {

class Trace {
public:
    bool check(std::string id, bool condition) {
        records_.push_back({std::move(id), condition});
        any_ = any_ || condition;
        return condition;
    }
    // Reduction steps use "->" in their id.
    void reduction(std::string id) { records_.push_back({std::move(id), true}); }

    bool any_fired() const { return any_; }

    Verdict exact() && {
        return {any_ ? Outcome::Division : Outcome::Split, Certainty::Exact, std::move(records_)};
    }
    Verdict sufficient_only() && {
        return {any_ ? Outcome::Division : Outcome::Unknown, Certainty::SufficientOnly,
                std::move(records_)};
    }

private:
    std::vector<TraceRecord> records_;
    bool any_ = false;
};

/// The criteria are stated with the even prime (if any) in the second slot.
/// H(p, q) and H(q, p) are isomorphic, so reordering is free.
struct OrderedPair {
    Prime p;
    Prime q;
};

inline OrderedPair order_pair(Prime p1, Prime p2, Trace& trace) {
    if (p1 == p2) {
        throw Error(Errc::EqualPrimes, "H(p, p) needs two distinct primes, got p = " +
                                           std::to_string(p1.value()) + " twice");
    }
    if (!p1.is_odd()) {
        trace.reduction("swap->q=2");
        return {p2, p1};
    }
    return {p1, p2};
}

inline bool both_odd(const OrderedPair& pq) { return pq.q.is_odd(); }
inline bool one_is_1mod4(const OrderedPair& pq) {
    return mod(pq.p.value(), 4) == 1 || mod(pq.q.value(), 4) == 1;
}
inline bool both_3mod4(const OrderedPair& pq) {
    return mod(pq.p.value(), 4) == 3 && mod(pq.q.value(), 4) == 3;
}

inline std::string dyadic_id(std::string_view prefix, i64 p) {
    const i64 r = mod(p, 8);
    std::string id = std::string(prefix) + "/dyadic";
    if (r == 3 || r == 5) {
        id += "/p≡" + std::to_string(r) + "mod8";
    }
    return id;
}

inline bool dyadic_residue(i64 p) {
    const i64 r = mod(p, 8);
    return r == 3 || r == 5;
}

/// Division criterion over Q(sqrt d) for the positive primes (p, q), q = 2 allowed.
/// `two_splits` is d = 1 (mod 8); `splits_at(x)` is (disc/x) = 1.
template <typename SplitsAt>
void quadratic_base_criterion(std::string_view prefix, bool two_splits, SplitsAt splits_at,
                              const OrderedPair& pq, Trace& trace) {
    const Prime p = pq.p;
    const Prime q = pq.q;
    const std::string pre(prefix);
    if (!both_odd(pq)) {
        trace.check(dyadic_id(prefix, p.value()),
                    dyadic_residue(p.value()) && (splits_at(p) || two_splits));
        return;
    }
    trace.check(pre + "/odd-pair", one_is_1mod4(pq) && legendre(p.value(), q) == -1 &&
                                       (splits_at(p) || splits_at(q)));
    trace.check(pre + "/both≡3mod4/p", both_3mod4(pq) && legendre(q.value(), p) != 1 &&
                                           (splits_at(p) || two_splits));
    trace.check(pre + "/both≡3mod4/q", both_3mod4(pq) && legendre(p.value(), q) != 1 &&
                                           (splits_at(q) || two_splits));
}

inline void quadratic_criterion(std::string_view prefix, const QuadraticField& field,
                                const OrderedPair& pq, Trace& trace) {
    const i64 disc = field.discriminant();
    quadratic_base_criterion(
        prefix, mod(field.d(), 8) == 1, [disc](Prime x) { return legendre(disc, x) == 1; }, pq,
        trace);
}

inline void biquadratic_criterion(std::string_view prefix, const QuadraticField& k1,
                                  const QuadraticField& k2, const OrderedPair& pq, Trace& trace) {
    const i64 disc1 = k1.discriminant();
    const i64 disc2 = k2.discriminant();
    quadratic_base_criterion(
        prefix, mod(k1.d(), 8) == 1 && mod(k2.d(), 8) == 1,
        [disc1, disc2](Prime x) { return legendre(disc1, x) == 1 && legendre(disc2, x) == 1; },
        pq, trace);
}

// Q(xi_7): degree 3 over Q(sqrt -7), and -7 = 1 (mod 8) so 2 always splits there.
inline void cyclotomic7(const OrderedPair& pq, Trace& trace) {
    const Prime p = pq.p;
    const Prime q = pq.q;
    if (!both_odd(pq)) {
        trace.check(dyadic_id("cyclotomic7", p.value()), dyadic_residue(p.value()));
        return;
    }
    trace.check("cyclotomic7/odd-pair",
                one_is_1mod4(pq) && legendre(p.value(), q) == -1 &&
                    (legendre(-7, p) == 1 || legendre(-7, q) == 1));
    trace.check("cyclotomic7/both≡3mod4", both_3mod4(pq));
}

// Q(xi_8) = Q(i, sqrt 2).
inline void cyclotomic8(const OrderedPair& pq, Trace& trace) {
    const Prime p = pq.p;
    const Prime q = pq.q;
    trace.check("cyclotomic8/odd-pair/≡1mod8",
                both_odd(pq) && legendre(p.value(), q) == -1 &&
                    (mod(p.value(), 8) == 1 || mod(q.value(), 8) == 1));
}

// Q(xi_9): degree 3 over Q(sqrt -3); (-3/x) = 1 iff x = 1 (mod 3).
// The odd-pair case keeps the 1 (mod 4) and 1 (mod 3) conditions independent:
// they may be met by different primes of the pair.
inline void cyclotomic9(const OrderedPair& pq, Trace& trace) {
    const Prime p = pq.p;
    const Prime q = pq.q;
    const i64 pv = p.value();
    const i64 qv = q.value();
    if (!both_odd(pq)) {
        const i64 r = mod(pv, 24);
        std::string id = "cyclotomic9/dyadic";
        if (r == 19 || r == 13) {
            id += "/p≡" + std::to_string(r) + "mod24";
        }
        trace.check(id, r == 19 || r == 13);
        return;
    }
    trace.check("cyclotomic9/odd-pair", one_is_1mod4(pq) &&
                                            (mod(pv, 3) == 1 || mod(qv, 3) == 1) &&
                                            legendre(pv, q) == -1);
    trace.check("cyclotomic9/both≡3mod4/p",
                both_3mod4(pq) && legendre(qv, p) != 1 && mod(pv, 3) == 1);
    trace.check("cyclotomic9/both≡3mod4/q",
                both_3mod4(pq) && legendre(pv, q) != 1 && mod(qv, 3) == 1);
}

// Q(xi_11): degree 5 over Q(sqrt -11); -11 = 5 (mod 8) so 2 is inert there.
inline void cyclotomic11(const OrderedPair& pq, Trace& trace) {
    const Prime p = pq.p;
    const Prime q = pq.q;
    if (!both_odd(pq)) {
        trace.check(dyadic_id("cyclotomic11", p.value()),
                    dyadic_residue(p.value()) && legendre(-11, p) == 1);
        return;
    }
    trace.check("cyclotomic11/odd-pair",
                one_is_1mod4(pq) && legendre(p.value(), q) == -1 &&
                    (legendre(-11, p) == 1 || legendre(-11, q) == 1));
    trace.check("cyclotomic11/both≡3mod4/p",
                both_3mod4(pq) && legendre(q.value(), p) != 1 && legendre(-11, p) == 1);
    trace.check("cyclotomic11/both≡3mod4/q",
                both_3mod4(pq) && legendre(p.value(), q) != 1 && legendre(-11, q) == 1);
}

// Q(xi_12) = Q(i, sqrt -3). The both-3-mod-4 case can never fire here.
inline void cyclotomic12(const OrderedPair& pq, Trace& trace) {
    const Prime p = pq.p;
    const Prime q = pq.q;
    if (!both_odd(pq)) {
        trace.check("cyclotomic12/dyadic/p≡13mod24", mod(p.value(), 24) == 13);
        return;
    }
    trace.check("cyclotomic12/odd-pair/≡1mod12",
                legendre(p.value(), q) == -1 &&
                    (mod(p.value(), 12) == 1 || mod(q.value(), 12) == 1));
}

// Q(xi_5): sufficient only. p1 = 1 (mod 5) splits completely and ramifies in H when (p2/p1) = -1.
inline bool cyclotomic5_hypothesis(Prime p1, Prime p2) {
    return p1.is_odd() && mod(p1.value(), 5) == 1 && legendre(p2.value(), p1) == -1;
}

// Q(xi_{l^k}), l = 3 (mod 4) prime: every step above Q(sqrt -l) has odd degree.
inline void prime_power_criterion(i64 l, const OrderedPair& pq, Trace& trace) {
    const Prime p = pq.p;
    const Prime q = pq.q;
    const bool two_splits = mod(l, 8) == 7;
    auto splits_at = [l](Prime x) { return legendre(-l, x) == 1; };
    if (!both_odd(pq)) {
        trace.check(dyadic_id("l-power", p.value()),
                    dyadic_residue(p.value()) && (splits_at(p) || two_splits));
        return;
    }
    trace.check("l-power/odd-pair", one_is_1mod4(pq) && legendre(p.value(), q) == -1 &&
                                        (splits_at(p) || splits_at(q)));
    trace.check("l-power/both≡3mod4/p",
                both_3mod4(pq) && legendre(q.value(), p) != 1 && (splits_at(p) || two_splits));
    trace.check("l-power/both≡3mod4/q",
                both_3mod4(pq) && legendre(p.value(), q) != 1 && (splits_at(q) || two_splits));
}

inline Prime checked_prime_modulus(i64 l) {
    const Prime prime(l);
    if (mod(l, 4) != 3) {
        throw Error(Errc::BadModulus, "l must be a prime = 3 (mod 4), got " + std::to_string(l));
    }
    return prime;
}


}

/// Division vs split of H(p, q) over Q(sqrt d).
inline Verdict classify_quadratic(i64 d, Prime p, Prime q) {
    const QuadraticField field = make_quadratic(d);
    detail::Trace trace;
    const auto pq = detail::order_pair(p, q, trace);
    detail::quadratic_criterion("quadratic", field, pq, trace);
    return std::move(trace).exact();
}

/// Division vs split of H(p, q) over Q(sqrt d1, sqrt d2).
inline Verdict classify_biquadratic(i64 d1, i64 d2, Prime p, Prime q) {
    const QuadraticField k1 = make_quadratic(d1);
    const QuadraticField k2 = make_quadratic(d2);
    if (d1 == d2) {
        throw Error(Errc::DisallowedValue, "biquadratic field needs d1 != d2");
    }
    detail::Trace trace;
    const auto pq = detail::order_pair(p, q, trace);
    detail::biquadratic_criterion("biquadratic", k1, k2, pq, trace);
    return std::move(trace).exact();
}

/// Division vs split over Q(xi_{l^k}) for a prime l = 3 (mod 4) distinct from p1, p2.
/// The answer does not depend on k.
inline Verdict classify_prime_power(i64 l, int k, Prime p1, Prime p2) {
    detail::checked_prime_modulus(l);
    if (k < 1) {
        throw Error(Errc::InvalidArgument, "exponent k must be >= 1");
    }
    detail::Trace trace;
    const auto pq = detail::order_pair(p1, p2, trace);
    if (p1.value() == l || p2.value() == l) {
        throw Error(Errc::OutOfScope, "l = " + std::to_string(l) + " is one of the two primes");
    }
    detail::prime_power_criterion(l, pq, trace);
    return std::move(trace).exact();
}

/// Dispatches on the canonical order: 3, 4 via Q(sqrt -3), Q(i); 5 sufficient-only;
/// 7, 8, 9, 11, 12 by their own criteria; other l^k with l = 3 (mod 4) by the
/// prime-power criterion. Anything else is UnsupportedField.
inline Verdict classify_cyclotomic(i64 n, Prime p1, Prime p2) {
    detail::Trace trace;
    const i64 canon = canonical_n(n);
    if (canon != n) {
        trace.reduction("canonical->n=" + std::to_string(canon));
    }
    if (canon == 5) {
        if (p1 == p2) {
            throw Error(Errc::EqualPrimes, "H(p, p) needs two distinct primes");
        }
        trace.check("cyclotomic5/p1≡1mod5&(p2/p1)=-1", detail::cyclotomic5_hypothesis(p1, p2));
        trace.check("cyclotomic5/p2≡1mod5&(p1/p2)=-1", detail::cyclotomic5_hypothesis(p2, p1));
        return std::move(trace).sufficient_only();
    }

    const auto pq = detail::order_pair(p1, p2, trace);
    switch (canon) {
        case 3:
            trace.reduction("cyclotomic3->quadratic(-3)");
            detail::quadratic_criterion("quadratic", make_quadratic(-3), pq, trace);
            return std::move(trace).exact();
        case 4:
            trace.reduction("cyclotomic4->quadratic(-1)");
            detail::quadratic_criterion("quadratic", make_quadratic(-1), pq, trace);
            return std::move(trace).exact();
        case 7: detail::cyclotomic7(pq, trace); return std::move(trace).exact();
        case 8: detail::cyclotomic8(pq, trace); return std::move(trace).exact();
        case 9: detail::cyclotomic9(pq, trace); return std::move(trace).exact();
        case 11: detail::cyclotomic11(pq, trace); return std::move(trace).exact();
        case 12: detail::cyclotomic12(pq, trace); return std::move(trace).exact();
        default: break;
    }

    const auto power = as_prime_power(canon);
    if (!power || mod(power->prime, 4) != 3) {
        throw Error(Errc::UnsupportedField,
                    "no criterion for Q(xi_" + std::to_string(n) + ")");
    }
    const i64 l = power->prime;
    if (pq.p.value() == l || pq.q.value() == l) {
        // Not covered by the prime-power statement; the same odd-degree
        // descent to Q(sqrt -l) still applies.
        trace.reduction("odd-degree->quadratic(" + std::to_string(-l) + ")");
        detail::quadratic_criterion("quadratic", make_quadratic(-l), pq, trace);
    } else {
        trace.reduction("cyclotomic" + std::to_string(canon) + "->l-power");
        detail::prime_power_criterion(l, pq, trace);
    }
    return std::move(trace).exact();
}

/// Kummer extensions of Q(xi_{l^k}) have degree dividing l^k, which is odd,
/// so the verdict is inherited from the cyclotomic base.
inline Verdict classify_kummer(i64 l, int k, Prime p1, Prime p2) {
    detail::checked_prime_modulus(l);
    if (k < 1) {
        throw Error(Errc::InvalidArgument, "exponent k must be >= 1");
    }
    const i64 n = checked_pow(l, k);
    Verdict base = classify_cyclotomic(n, p1, p2);
    base.trace.insert(base.trace.begin(),
                      TraceRecord{"kummer->cyclotomic" + std::to_string(n), true});
    return base;
}

inline Verdict classify(const FieldDescriptor& field, Prime p1, Prime p2) {
    struct Visitor {
        Prime p1;
        Prime p2;
        Verdict operator()(const RationalField&) const {
            throw Error(Errc::UnsupportedField, "no criterion-based classifier over Q");
        }
        Verdict operator()(const QuadraticBase& f) const { return classify_quadratic(f.d, p1, p2); }
        Verdict operator()(const BiquadraticBase& f) const {
            return classify_biquadratic(f.d1, f.d2, p1, p2);
        }
        Verdict operator()(const CyclotomicBase& f) const {
            return classify_cyclotomic(f.n, p1, p2);
        }
        Verdict operator()(const KummerBase& f) const { return classify_kummer(f.l, f.k, p1, p2); }
    };
    return std::visit(Visitor{p1, p2}, field);
}

}

#endif
