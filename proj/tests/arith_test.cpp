#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "quatsplit/arith.hpp"

namespace {

using namespace quatsplit;

bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Brute-force quadratic residue test, independent of Euler's criterion.
int legendre_by_squares(i64 a, i64 p) {
    const i64 r = mod(a, p);
    if (r == 0) return 0;
    for (i64 x = 1; x < p; ++x) {
        if (x * x % p == r) return 1;
    }
    return -1;
}

TEST(IsPrime, Examples) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(7918));  // 2 * 37 * 107
}

TEST(IsPrime, MatchesTrialDivisionBelow100000) {
    for (std::uint64_t n = 0; n < 100000; ++n) {
        ASSERT_EQ(is_prime(n), trial_division_prime(n)) << n;
    }
}

TEST(IsPrime, LargeAndAdversarialInputs) {
    EXPECT_TRUE(is_prime((1ULL << 61) - 1));
    EXPECT_TRUE(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(561));                     // Carmichael
    EXPECT_FALSE(is_prime(2047));                    // strong pseudoprime to base 2
    EXPECT_FALSE(is_prime(3215031751ULL));           // spsp(2,3,5,7)
    EXPECT_FALSE(is_prime(3825123056546413051ULL));  // spsp to bases 2..23
    EXPECT_FALSE(is_prime(std::numeric_limits<std::uint64_t>::max()));
}

TEST(Prime, RejectsNonPrimes) {
    EXPECT_THROW(Prime(1), Error);
    EXPECT_THROW(Prime(0), Error);
    EXPECT_THROW(Prime(-3), Error);
    EXPECT_THROW(Prime(91), Error);
    EXPECT_EQ(Prime(97).value(), 97);
    try {
        Prime(15);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPrime);
    }
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(2, 7), 1);
    EXPECT_EQ(legendre(14, 7), 0);
    EXPECT_EQ(legendre(-1, 5), 1);
    EXPECT_EQ(legendre(3, 7), -1);
}

TEST(Legendre, RejectsEvenOrCompositeModulus) {
    EXPECT_THROW(legendre(3, 2), Error);
    EXPECT_THROW(legendre(3, 9), Error);
}

TEST(Legendre, MatchesSquareEnumeration) {
    for (i64 p : primes_up_to(200)) {
        if (p == 2) continue;
        for (i64 a = -2 * p; a <= 2 * p; ++a) {
            ASSERT_EQ(legendre(a, p), legendre_by_squares(a, p)) << a << " " << p;
        }
    }
}

class LegendreLaws : public ::testing::Test {
protected:
    std::mt19937_64 rng{20240611};
    std::vector<i64> odd_primes = [] {
        auto ps = primes_up_to(20000);
        ps.erase(ps.begin());
        return ps;
    }();

    i64 random_prime() {
        return odd_primes[std::uniform_int_distribution<std::size_t>(0, odd_primes.size() - 1)(rng)];
    }
    i64 random_int() { return std::uniform_int_distribution<i64>(-1'000'000, 1'000'000)(rng); }
};

TEST_F(LegendreLaws, Multiplicativity) {
    for (int i = 0; i < 10000; ++i) {
        const i64 p = random_prime();
        const i64 a = random_int();
        const i64 b = random_int();
        ASSERT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
    }
}

TEST_F(LegendreLaws, Reciprocity) {
    for (int i = 0; i < 10000; ++i) {
        const i64 p = random_prime();
        const i64 q = random_prime();
        if (p == q) continue;
        const int sign = ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 ? 1 : -1;
        ASSERT_EQ(legendre(p, q) * legendre(q, p), sign) << p << " " << q;
    }
}

TEST_F(LegendreLaws, Supplements) {
    for (int i = 0; i < 10000; ++i) {
        const i64 p = random_prime();
        ASSERT_EQ(legendre(-1, p), ((p - 1) / 2) % 2 == 0 ? 1 : -1);
        ASSERT_EQ(legendre(2, p), ((p * p - 1) / 8) % 2 == 0 ? 1 : -1);
    }
}

TEST_F(LegendreLaws, Periodicity) {
    for (int i = 0; i < 10000; ++i) {
        const i64 p = random_prime();
        const i64 a = random_int();
        const i64 k = std::uniform_int_distribution<i64>(-50, 50)(rng);
        ASSERT_EQ(legendre(a, p), legendre(a + k * p, p));
    }
}

TEST(EulerPhi, Examples) {
    EXPECT_EQ(euler_phi(9), 6);
    EXPECT_EQ(euler_phi(8), 4);
    EXPECT_EQ(euler_phi(1), 1);
    EXPECT_THROW(euler_phi(0), Error);
}

TEST(EulerPhi, MatchesGcdCount) {
    for (i64 n = 1; n <= 500; ++n) {
        i64 count = 0;
        for (i64 k = 1; k <= n; ++k) {
            if (std::gcd(k, n) == 1) ++count;
        }
        ASSERT_EQ(euler_phi(n), count) << n;
    }
}

TEST(MultiplicativeOrder, Examples) {
    EXPECT_EQ(multiplicative_order(2, 7), 3);
    EXPECT_EQ(multiplicative_order(1, 12), 1);
    EXPECT_EQ(multiplicative_order(2, 9), 6);
    EXPECT_THROW(multiplicative_order(3, 9), Error);
    EXPECT_THROW(multiplicative_order(2, 1), Error);
}

TEST(MultiplicativeOrder, MatchesRepeatedMultiplication) {
    for (i64 n = 2; n <= 200; ++n) {
        for (i64 a = -n; a <= n; ++a) {
            if (std::gcd(mod(a, n), n) != 1) continue;
            i64 f = 1;
            i64 x = mod(a, n);
            while (x != 1 % n) {
                x = x * mod(a, n) % n;
                ++f;
            }
            ASSERT_EQ(multiplicative_order(a, n), f) << a << " mod " << n;
        }
    }
}

TEST(MultiplicativeOrder, DividesPhiOnRandomPairs) {
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 10000) {
        const i64 n = std::uniform_int_distribution<i64>(2, 1'000'000)(rng);
        const i64 a = std::uniform_int_distribution<i64>(1, n)(rng);
        if (std::gcd(a, n) != 1) continue;
        const i64 f = multiplicative_order(a, n);
        ASSERT_EQ(euler_phi(n) % f, 0);
        ASSERT_EQ(powmod(static_cast<u64>(a), static_cast<u64>(f), static_cast<u64>(n)), 1 % n);
        ++checked;
    }
}

TEST(CheckedMul, ThrowsOnOverflow) {
    EXPECT_EQ(checked_mul(1 << 20, 1 << 20), i64{1} << 40);
    EXPECT_THROW(checked_mul(i64{1} << 32, i64{1} << 32), Error);
    EXPECT_THROW(checked_pow(10, 19), Error);
    EXPECT_EQ(checked_pow(3, 4), 81);
}

TEST(Squarefree, PartsAndPredicates) {
    EXPECT_TRUE(is_squarefree(-1));
    EXPECT_TRUE(is_squarefree(30));
    EXPECT_FALSE(is_squarefree(12));
    EXPECT_FALSE(is_squarefree(0));
    EXPECT_EQ(squarefree_part(-2), -2);
    EXPECT_EQ(squarefree_part(-8), -2);
    EXPECT_EQ(squarefree_part(3 * 15), 5);
    EXPECT_EQ(squarefree_part(36), 1);
}

TEST(Factorize, ReconstructsInput) {
    for (std::uint64_t n = 1; n < 5000; ++n) {
        std::uint64_t product = 1;
        for (const auto& [p, e] : factorize(n)) {
            ASSERT_TRUE(trial_division_prime(p));
            for (int i = 0; i < e; ++i) product *= p;
        }
        ASSERT_EQ(product, n);
    }
}

}
