#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "dhseq/error.hpp"
#include "dhseq/numtheory.hpp"

using namespace dhseq;

namespace {

// Oracles: plain loops, no shared code with the library.
u64 naive_order(u64 a, u64 m) {
    u64 x = a % m, k = 1;
    while (x != 1) {
        x = x * a % m;
        ++k;
    }
    return k;
}

u64 naive_phi(u64 m) {
    u64 c = 0;
    for (u64 x = 1; x <= m; ++x) c += std::gcd(x, m) == 1;
    return c;
}

bool naive_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Carmichael function of an odd n: lcm of phi(p^e) over a trial-division factorization.
u64 odd_carmichael(u64 n) {
    u64 l = 1;
    for (u64 p = 3; n > 1; p += 2) {
        u64 q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
        }
        if (q > 1) l = std::lcm(l, q / p * (p - 1));
    }
    return l;
}

}  // namespace

TEST(ValidateModulus, AcceptsSmallExamples) {
    EXPECT_EQ(validate_modulus({{3, 1}, {7, 1}}).n(), 21u);
    // gcd(2,4) = gcd(2,6) = gcd(4,6) = 2
    EXPECT_EQ(validate_modulus({{3, 1}, {5, 1}, {7, 1}}).n(), 105u);
    EXPECT_EQ(validate_modulus({{3, 1}, {13, 1}}).n(), 39u);
    EXPECT_EQ(validate_modulus({{3, 2}}).n(), 9u);
}

TEST(ValidateModulus, SortsFactors) {
    const Modulus m = validate_modulus({{7, 1}, {3, 1}});
    ASSERT_EQ(m.size(), 2u);
    EXPECT_EQ(m.factors()[0].prime, 3u);
    EXPECT_EQ(m.factors()[1].prime, 7u);
    EXPECT_EQ(m.factor_string(), "3:1,7:1");
}

TEST(ValidateModulus, ReportsOffendingPair) {
    try {
        validate_modulus({{5, 1}, {13, 1}});
        FAIL() << "expected GcdConditionViolated";
    } catch (const GcdConditionViolated& e) {
        EXPECT_EQ(e.first(), 0u);
        EXPECT_EQ(e.second(), 1u);
        EXPECT_EQ(e.gcd(), 4u);
    }
    // 63 = 9 * 7: gcd(6, 6) = 6
    EXPECT_THROW(validate_modulus({{3, 2}, {7, 1}}), GcdConditionViolated);
}

TEST(ValidateModulus, RejectsBadFactors) {
    EXPECT_THROW(validate_modulus({}), InvalidArgument);
    EXPECT_THROW(validate_modulus({{9, 1}}), NotPrime);
    EXPECT_THROW(validate_modulus({{1, 1}}), NotPrime);
    EXPECT_THROW(validate_modulus({{2, 1}, {3, 1}}), EvenOrRepeatedPrime);
    EXPECT_THROW(validate_modulus({{3, 1}, {3, 2}}), EvenOrRepeatedPrime);
    EXPECT_THROW(validate_modulus({{3, 0}}), InvalidArgument);
    EXPECT_THROW(validate_modulus({{3, 40}}), InvalidArgument);  // >= 2^63
}

TEST(ValidateModulus, PairwiseGcdIsTwoForEveryAcceptedModulus) {
    for (const auto& m : enumerate_moduli(2000)) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                EXPECT_EQ(std::gcd(naive_phi(m.factors()[i].value()), naive_phi(m.factors()[j].value())), 2u)
                    << m.n();
            }
        }
    }
}

TEST(ParseModulus, Formats) {
    EXPECT_EQ(parse_modulus("3:1,7:1").n(), 21u);
    EXPECT_EQ(parse_modulus("3,7").n(), 21u);
    EXPECT_EQ(parse_modulus("3:2").n(), 9u);
    EXPECT_THROW(parse_modulus(""), ParseError);
    EXPECT_THROW(parse_modulus("3:x"), ParseError);
    EXPECT_THROW(parse_modulus("3;7"), ParseError);
}

TEST(Primality, MatchesTrialDivision) {
    for (u64 n = 0; n < 20000; ++n) EXPECT_EQ(is_prime(n), naive_prime(n)) << n;
    EXPECT_TRUE(is_prime((u64{1} << 61) - 1));
    EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2,3,5,7
    EXPECT_FALSE(is_prime(561));
}

TEST(Factorize, ProductRoundTrip) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const u64 n = rng() % (u64{1} << 50) + 2;
        u64 prod = 1;
        for (const auto& pp : factorize(n)) {
            EXPECT_TRUE(is_prime(pp.prime));
            prod *= pp.value();
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(PrimitiveRoot, Examples) {
    EXPECT_EQ(primitive_root(3, 1), 2u);
    EXPECT_EQ(primitive_root(7, 1), 3u);
    EXPECT_EQ(primitive_root(3, 2), 2u);
}

TEST(PrimitiveRoot, SmallestByExhaustiveOrder) {
    for (u64 p = 3; p < 200; p += 2) {
        if (!naive_prime(p)) continue;
        for (unsigned e = 1; e <= 3; ++e) {
            u64 q = 1;
            for (unsigned k = 0; k < e; ++k) q *= p;
            if (q > 5000) break;
            const u64 phi = naive_phi(q);
            u64 expected = 0;
            for (u64 g = 2; g < q && !expected; ++g) {
                if (std::gcd(g, q) == 1 && naive_order(g, q) == phi) expected = g;
            }
            EXPECT_EQ(primitive_root(p, e), expected) << p << "^" << e;
        }
    }
}

TEST(Crt, Examples) {
    const Modulus m = validate_modulus({{3, 1}, {7, 1}});
    EXPECT_EQ(crt_combine({{2, 3}}, m), 17u);
    EXPECT_EQ(crt_combine({{0, 0}}, m), 0u);
    EXPECT_EQ(crt_combine({{1, 1}}, m), 1u);
    EXPECT_THROW(crt_combine({{1}}, m), InvalidArgument);
}

TEST(Crt, RoundTripOverFullRing) {
    for (const auto& m : enumerate_moduli(10000)) {
        for (u64 x = 0; x < m.n(); ++x) ASSERT_EQ(crt_combine(crt_split(x, m), m), x) << m.n();
    }
}

TEST(CombinedRoot, Examples) {
    EXPECT_EQ(combined_root(parse_modulus("3:1,7:1")), 17u);
    EXPECT_EQ(combined_root(parse_modulus("3:2")), 2u);
    EXPECT_EQ(combined_root(parse_modulus("3:1,5:1")), 2u);
}

TEST(CombinedRoot, IsPrimitiveModuloEveryFactor) {
    for (const auto& m : enumerate_moduli(2000)) {
        const u64 g = combined_root(m);
        for (const auto& pp : m.factors()) {
            const u64 q = pp.value();
            EXPECT_EQ(naive_order(g % q, q), naive_phi(q)) << m.n();
        }
    }
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(2, 7), 1);
    EXPECT_EQ(legendre(3, 7), -1);
    EXPECT_EQ(legendre(7, 7), 0);
    EXPECT_EQ(legendre(-1, 7), -1);
}

TEST(Legendre, PeriodicAndMultiplicative) {
    for (u64 p = 3; p < 150; p += 2) {
        if (!naive_prime(p)) continue;
        for (long long a = 1; a < static_cast<long long>(p); ++a) {
            EXPECT_EQ(legendre(a, p), legendre(a + 5 * static_cast<long long>(p), p));
            for (long long b = 1; b < static_cast<long long>(p); ++b) {
                EXPECT_EQ(legendre(a * b, p), legendre(a, p) * legendre(b, p));
            }
        }
    }
}

TEST(OrderOfTwo, Examples) {
    EXPECT_EQ(order_of_two(21), 6u);
    EXPECT_EQ(order_of_two(33), 10u);
    EXPECT_EQ(order_of_two(3), 2u);
    EXPECT_THROW(order_of_two(1), InvalidArgument);
    EXPECT_THROW(order_of_two(10), InvalidArgument);
}

TEST(OrderOfTwo, MatchesNaiveOrderAndDividesCarmichael) {
    for (u64 n = 3; n <= 10000; n += 2) {
        const u64 m = order_of_two(n);
        ASSERT_EQ(m, naive_order(2, n)) << n;
        ASSERT_EQ(odd_carmichael(n) % m, 0u) << n;
    }
}

TEST(Divisors, Examples) {
    EXPECT_EQ(proper_divisors_gt1(21), (std::vector<u64>{3, 7, 21}));
    EXPECT_EQ(proper_divisors_gt1(9), (std::vector<u64>{3, 9}));
    EXPECT_EQ(proper_divisors_gt1(105), (std::vector<u64>{3, 5, 7, 15, 21, 35, 105}));
    EXPECT_EQ(proper_divisors_gt1(parse_modulus("3:1,5:1,7:1")),
              (std::vector<u64>{3, 5, 7, 15, 21, 35, 105}));
}

TEST(EnumerateModuli, ExcludesInvalid) {
    std::vector<u64> ns;
    for (const auto& m : enumerate_moduli(100)) ns.push_back(m.n());
    EXPECT_NE(std::find(ns.begin(), ns.end(), 9u), ns.end());
    EXPECT_NE(std::find(ns.begin(), ns.end(), 15u), ns.end());
    EXPECT_NE(std::find(ns.begin(), ns.end(), 21u), ns.end());
    EXPECT_EQ(std::find(ns.begin(), ns.end(), 63u), ns.end());
    EXPECT_EQ(std::find(ns.begin(), ns.end(), 65u), ns.end());  // gcd(4, 12) = 4
}

TEST(InverseMod, Basic) {
    EXPECT_EQ(inverse_mod(3, 7), 5u);
    EXPECT_THROW(inverse_mod(3, 9), InvalidArgument);
}
