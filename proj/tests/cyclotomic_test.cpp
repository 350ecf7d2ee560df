#include <gtest/gtest.h>

#include "quatsplit/cyclotomic.hpp"
#include "quatsplit/quadratic.hpp"

namespace {

using namespace quatsplit;

TEST(CanonicalN, Examples) {
    EXPECT_EQ(canonical_n(6), 3);
    EXPECT_EQ(canonical_n(10), 5);
    EXPECT_EQ(canonical_n(12), 12);
    EXPECT_EQ(canonical_n(3), 3);
    EXPECT_EQ(canonical_n(14), 7);
    EXPECT_THROW(canonical_n(2), Error);
}

TEST(CanonicalN, IdempotentAndNeverTwoModFour) {
    for (i64 n = 3; n <= 1000; ++n) {
        const i64 c = canonical_n(n);
        ASSERT_EQ(canonical_n(c), c);
        ASSERT_NE(mod(c, 4), 2);
        ASSERT_EQ(euler_phi(c), euler_phi(n));
    }
}

TEST(MakeCyclotomic, CanonicalizesAndCarriesDegree) {
    EXPECT_EQ(make_cyclotomic(10), (CyclotomicField{5, 4}));
    EXPECT_EQ(make_cyclotomic(9), (CyclotomicField{9, 6}));
}

TEST(FactorizationShape, Examples) {
    EXPECT_EQ(factorization_shape(Prime(2), 7), (FactorizationShape{1, 3, 2}));
    EXPECT_EQ(factorization_shape(Prime(29), 7), (FactorizationShape{1, 1, 6}));
    EXPECT_EQ(factorization_shape(Prime(3), 9), (FactorizationShape{6, 1, 1}));
    EXPECT_EQ(factorization_shape(Prime(2), 12), (FactorizationShape{2, 2, 1}));
    EXPECT_EQ(factorization_shape(Prime(3), 12), (FactorizationShape{2, 2, 1}));
}

TEST(FactorizationShape, ProductIsDegreeAndResidualDegreeIsBruteForceOrder) {
    for (i64 n = 3; n <= 100; ++n) {
        if (canonical_n(n) != n) continue;
        for (i64 p : primes_up_to(1000)) {
            const auto shape = factorization_shape(Prime(p), n);
            ASSERT_EQ(shape.e * shape.f * shape.g, euler_phi(n)) << p << " " << n;
            if (n % p != 0) {
                ASSERT_EQ(shape.e, 1);
                i64 f = 1;
                i64 x = p % n;
                while (x != 1) {
                    x = x * p % n;
                    ++f;
                }
                ASSERT_EQ(shape.f, f);
            }
        }
    }
}

TEST(SplitsCompletely, Examples) {
    EXPECT_TRUE(splits_completely(Prime(29), 7));
    EXPECT_FALSE(splits_completely(Prime(2), 7));
    EXPECT_FALSE(splits_completely(Prime(7), 7));
    EXPECT_TRUE(splits_completely(Prime(13), 12));
}

TEST(SplitsCompletely, EquivalentToTrivialShape) {
    for (i64 n = 3; n <= 100; ++n) {
        if (canonical_n(n) != n) continue;
        const FactorizationShape complete{1, 1, euler_phi(n)};
        for (i64 p : primes_up_to(1000)) {
            const bool by_shape = factorization_shape(Prime(p), n) == complete;
            ASSERT_EQ(splits_completely(Prime(p), n), by_shape) << p << " " << n;
            ASSERT_EQ(by_shape, p % n == 1) << p << " " << n;
        }
    }
}

TEST(QuadraticSubfield, Examples) {
    EXPECT_EQ(quadratic_subfield(Prime(7)), -7);
    EXPECT_EQ(quadratic_subfield(Prime(5)), 5);
    EXPECT_EQ(quadratic_subfield(Prime(11)), -11);
    EXPECT_EQ(quadratic_subfield(Prime(3)), -3);
    EXPECT_THROW(quadratic_subfield(Prime(2)), Error);
}

TEST(MaximalRealSubfield, Degrees) {
    EXPECT_EQ(maximal_real_subfield_degree(11), 5);
    EXPECT_EQ(maximal_real_subfield_degree(7), 3);
    EXPECT_EQ(maximal_real_subfield_degree(8), 2);
    EXPECT_EQ(maximal_real_subfield_degree(10), 2);
}

// A prime splitting completely in Q(xi_l) splits in every subfield, in
// particular in Q(sqrt(+-l)).
TEST(Tower, CompleteSplittingDescendsToQuadraticSubfield) {
    for (i64 l : {3, 5, 7, 11, 19, 23}) {
        const auto sub = make_quadratic(quadratic_subfield(Prime(l)));
        for (i64 p : primes_up_to(1000)) {
            if (p == 2 || p == l) continue;
            if (splits_completely(Prime(p), l)) {
                ASSERT_EQ(splitting_type(Prime(p), sub), SplittingType::Split) << p << " " << l;
            }
        }
    }
}

TEST(AsPrimePower, Recognizes) {
    ASSERT_TRUE(as_prime_power(27).has_value());
    EXPECT_EQ(as_prime_power(27)->prime, 3);
    EXPECT_EQ(as_prime_power(27)->exponent, 3);
    EXPECT_EQ(as_prime_power(19)->exponent, 1);
    EXPECT_FALSE(as_prime_power(12).has_value());
    EXPECT_FALSE(as_prime_power(1).has_value());
}

}
