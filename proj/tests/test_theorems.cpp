#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dhseq/error.hpp"
#include "dhseq/lincomp.hpp"
#include "dhseq/theorems.hpp"

using namespace dhseq;

namespace {

GeneralizedCyclotomy cyclotomy(const std::string& factors, const std::string& assignment = "") {
    const Modulus m = parse_modulus(factors);
    auto a = assignment.empty() ? VectorAssignment::standard(m) : parse_assignment_inline(m, assignment);
    a.fill_defaults();
    return GeneralizedCyclotomy(m, a);
}

// Brute-force b with b_k in [0, q_k) and sum b_k n/q_k = n/d (mod n).
std::vector<u64> brute_split(u64 n, const std::vector<u64>& q, u64 d) {
    std::vector<u64> b(q.size(), 0);
    for (;;) {
        u64 s = 0;
        for (std::size_t k = 0; k < q.size(); ++k) s = (s + b[k] * (n / q[k])) % n;
        if (s == (n / d) % n) return b;
        std::size_t k = 0;
        while (k < q.size() && ++b[k] == q[k]) b[k++] = 0;
        if (k == q.size()) return {};
    }
}

int euler_criterion(u64 a, u64 p) {
    u64 r = 1;
    for (u64 i = 0; i < (p - 1) / 2; ++i) r = r * (a % p) % p;
    return r == 1 ? 1 : (r == 0 ? 0 : -1);
}

bool has(const std::vector<CheckVerdict>& vs, const std::string& name, bool applicable, bool holds) {
    return std::any_of(vs.begin(), vs.end(), [&](const CheckVerdict& v) {
        return v.name == name && v.applicable == applicable && (!applicable || v.holds == holds);
    });
}

}  // namespace

TEST(CrtSplit, Examples) {
    const Modulus m21 = parse_modulus("3,7");
    const auto s = crt_split(m21, 21);
    EXPECT_EQ(s.b, (std::vector<u64>{1, 5}));
    EXPECT_EQ(s.combination(), 1u);
    const auto s3 = crt_split(m21, 3);
    EXPECT_EQ(s3.b, (std::vector<u64>{1}));
    EXPECT_EQ(s3.combination(), 7u);
}

TEST(CrtSplit, MatchesBruteForce) {
    for (const std::string f : {"3,5,7", "3:2,5", "3,7", "3:3", "3,11"}) {
        const Modulus m = parse_modulus(f);
        for (const auto& div : divisors_of(m)) {
            const auto s = crt_split(m, div.value);
            std::vector<u64> q;
            for (const auto& pp : div.factors) q.push_back(pp.value());
            EXPECT_EQ(s.b, brute_split(div.value, q, div.value)) << f << " d=" << div.value;
            EXPECT_EQ(s.combination(), m.n() / div.value) << f << " d=" << div.value;
        }
    }
}

TEST(Lemma1, HoldsOnEveryDivisorForOddWeight) {
    for (const auto& m : enumerate_moduli(400)) {
        const auto cyc = GeneralizedCyclotomy(m, VectorAssignment::standard(m));
        for (const auto& div : divisors_of(m)) {
            const auto v = check_lemma1(cyc, div.value);
            EXPECT_TRUE(v.applicable && v.holds) << m.n() << " d=" << div.value;
        }
    }
}

TEST(Lemma1, EvenWeightIsNotApplicable) {
    const Modulus m = parse_modulus("3,7");
    const auto v = check_lemma1(m, 21, BitVector{1, 1});
    EXPECT_FALSE(v.applicable);
    EXPECT_TRUE(check_lemma1(m, 21, BitVector{0, 1}).holds);
}

TEST(Lemma2, SetAndEvaluationForms) {
    for (const std::string f : {"3:2", "3,5", "3,7", "3,11", "3,5,7"}) {
        const auto cyc = cyclotomy(f);
        const BinaryField field = build_field(cyc.n());
        for (const auto& pair : cyc.class_pairs()) {
            const auto v = check_lemma2(cyc, pair.d(), &field);
            EXPECT_TRUE(v.applicable && v.holds) << f << " " << v.name << " " << v.witness.value_or("");
        }
    }
    const auto cyc9 = cyclotomy("3:2");
    const auto v = check_lemma2(cyc9, 3, nullptr);
    EXPECT_TRUE(v.applicable && v.holds);
    EXPECT_EQ(v.witness, "set form only (no field)");
}

TEST(Lemma3, BothSplitsOnSmallModuli) {
    for (const std::string f : {"3:2", "3,5", "3,7", "3,11", "3,5,7"}) {
        const auto cyc = cyclotomy(f);
        const BinaryField field = build_field(cyc.n());
        for (const auto& pair : cyc.class_pairs()) {
            const auto v = check_lemma3(cyc, pair.d(), field);
            EXPECT_TRUE(v.applicable && v.holds) << f << " " << v.name << " " << v.witness.value_or("");
        }
    }
}

TEST(Lemma4, Examples) {
    for (const std::string f : {"3,7", "3,5", "3,11", "7,11", "3,13"}) {
        const Modulus m = parse_modulus(f);
        const auto cyc = GeneralizedCyclotomy(m, VectorAssignment::all_ones_top(m));
        const auto v = check_lemma4(cyc, build_field(m.n()));
        EXPECT_TRUE(v.applicable && v.holds) << f << " " << v.witness.value_or("");
    }
    const auto std21 = cyclotomy("3,7", "21:01");
    EXPECT_FALSE(check_lemma4(std21, build_field(21)).applicable);
    EXPECT_FALSE(check_lemma4(cyclotomy("3,5,7"), build_field(105)).applicable);
}

TEST(Lemma4, SpectrumOracle) {
    // S(alpha^v) on units computed straight from the bits.
    for (const auto& m : enumerate_moduli(300)) {
        if (m.size() != 2 || m.factors()[0].exponent != 1 || m.factors()[1].exponent != 1) continue;
        if (order_of_two(m.n()) > 64) continue;
        const auto cyc = GeneralizedCyclotomy(m, VectorAssignment::all_ones_top(m));
        const auto seq = generate(cyc);
        const BinaryField field = build_field(m.n());
        std::vector<u64> support;
        for (u64 i = 0; i < m.n(); ++i)
            if (seq.bits[i]) support.push_back(i);
        const bool both3 = m.factors()[0].prime % 4 == 3 && m.factors()[1].prime % 4 == 3;
        bool expect = true;
        for (u64 v = 1; v < m.n(); ++v) {
            if (gcd(v, m.n()) != 1) continue;
            const auto s = eval_index_set(support, v, field);
            expect = expect && (both3 ? BinaryField::is_zero(s) : s == BinaryField::one());
        }
        EXPECT_EQ(check_lemma4(cyc, field).holds, expect) << m.n();
        EXPECT_TRUE(expect) << m.n();
    }
}

TEST(Theorem1, Examples) {
    const auto cyc21 = cyclotomy("3,7");
    const BinaryField f21 = build_field(21);
    auto v = check_theorem1(cyc21, &f21);
    EXPECT_TRUE(v.applicable && v.holds);
    EXPECT_TRUE(check_theorem1(cyclotomy("3,5"), nullptr).holds);
    EXPECT_FALSE(check_theorem1(cyclotomy("3,7", "21:11"), &f21).applicable);
}

TEST(Theorem1, BoundAgainstBerlekampMassey) {
    for (const auto& m : enumerate_moduli(600)) {
        const auto cyc = GeneralizedCyclotomy(m, VectorAssignment::standard(m));
        const u64 L = lincomp_bm(generate(cyc)).L;
        EXPECT_GE(L + delta(m.n()), (m.n() + 1) / 2) << m.n();
        EXPECT_TRUE(check_theorem1(cyc, nullptr).holds) << m.n();
    }
}

TEST(Corollary, Examples) {
    const auto c9 = check_corollary(cyclotomy("3:2"));
    EXPECT_TRUE(c9.applicable && c9.holds);
    EXPECT_EQ(lincomp_bm(generate(cyclotomy("3:2"))).L, 9u);
    EXPECT_FALSE(check_corollary(cyclotomy("3,7")).applicable);
    const auto c5 = check_corollary(cyclotomy("5"));
    EXPECT_TRUE(c5.applicable && c5.holds);
    EXPECT_EQ(lincomp_bm(generate(cyclotomy("5"))).L, 5u);
}

TEST(PredictedL, Examples) {
    EXPECT_EQ(predicted_L_two_primes(3, 11), 13u);
    EXPECT_EQ(predicted_L_two_primes(3, 7), 6u);
    EXPECT_EQ(predicted_L_two_primes(7, 23), 15u);
    EXPECT_THROW(predicted_L_two_primes(3, 5), OutsideCaseTable);
    EXPECT_THROW(predicted_L_two_primes(5, 13), GcdConditionViolated);
}

TEST(PredictedL, SymmetricAndMatchesBerlekampMassey) {
    for (const auto& m : enumerate_moduli(700)) {
        if (m.size() != 2 || m.factors()[0].exponent != 1 || m.factors()[1].exponent != 1) continue;
        const u64 p1 = m.factors()[0].prime, p2 = m.factors()[1].prime;
        if (p1 % 4 != 3 || p2 % 4 != 3) continue;
        EXPECT_EQ(predicted_L_two_primes(p1, p2), predicted_L_two_primes(p2, p1));
        const auto seq = generate(m, VectorAssignment::all_ones_top(m));
        EXPECT_EQ(lincomp_bm(seq).L, predicted_L_two_primes(p1, p2)) << m.n();
    }
}

TEST(Legendre, ReciprocityForPrimesThreeModFour) {
    const std::vector<u64> ps{3, 7, 11, 19, 23, 31, 43, 47, 59, 67, 71, 79, 83};
    for (u64 p : ps)
        for (u64 q : ps) {
            if (p == q) continue;
            EXPECT_EQ(legendre(p, q), euler_criterion(p, q));
            EXPECT_EQ(legendre(p, q), -legendre(q, p)) << p << " " << q;
        }
}

TEST(RunChecks, SelectionsAndMissingField) {
    const auto cyc = cyclotomy("3,7", "21:11");
    const BinaryField f = build_field(21);
    const auto all = run_checks(cyc, CheckSelection::All, &f);
    EXPECT_TRUE(has(all, "lemma4", true, true));
    EXPECT_TRUE(has(all, "lemma1[d=21]", false, false));
    EXPECT_TRUE(has(all, "lemma1[d=3]", true, true));
    const auto nofield = run_checks(cyc, CheckSelection::All, nullptr);
    EXPECT_TRUE(has(nofield, "lemma4", false, false));
    EXPECT_EQ(run_checks(cyc, CheckSelection::Theorem1, &f).size(), 1u);
    EXPECT_EQ(parse_check_selection("lemma3"), CheckSelection::Lemma3);
    EXPECT_THROW(parse_check_selection("lemma9"), ParseError);
}
