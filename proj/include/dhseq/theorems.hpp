#pragma once

// Executable checks of the structural lemmas, the linear complexity bound and
// the two-prime closed forms. Each check returns a verdict with the first
// counterexample it met, rather than a bare boolean.

#include <optional>
#include <string>
#include <vector>

#include "dhseq/binary_field.hpp"
#include "dhseq/cyclotomy.hpp"

namespace dhseq {

struct CheckVerdict {
    std::string name;
    // Whether the statement's hypotheses hold for this input.
    bool applicable = false;
    // Meaningful only when applicable.
    bool holds = false;
    std::optional<std::string> witness;
};

// b_k with sum_k b_k n / p_k^l_k = n / d (mod n), b_k reduced mod p_k^l_k.
struct CrtSplitCoefficients {
    u64 n = 0;
    Divisor divisor;
    std::vector<u64> b;

    // sum_k b_k n / p_k^l_k mod n
    u64 combination() const;
};

CrtSplitCoefficients crt_split(const Modulus& modulus, u64 d);

// alpha^(b_k n / p_k^l_k), a primitive p_k^l_k-th root of unity.
FieldElement split_root(const BinaryField& field, const CrtSplitCoefficients& split, std::size_t k);

// g D_0 = D_1 and g D_1 = D_0 in Z_d, whenever a_d has odd weight.
CheckVerdict check_lemma1(const Modulus& modulus, u64 d, const BitVector& a);
CheckVerdict check_lemma1(const GeneralizedCyclotomy& cyc, u64 d);

// S_{(n/d)D_1}(alpha^(vg)) = S_{(n/d)D_0}(alpha^v) for v = 1..n-1, plus the set
// identity g (n/d) D_1 = (n/d) D_0 in Z_n. With no field only the set form runs.
CheckVerdict check_lemma2(const GeneralizedCyclotomy& cyc, u64 d, const BinaryField* field);

// L >= (n+1)/2 - delta when every a_d has odd weight; with a field also
// S(alpha^v) + S(alpha^(gv)) = 1 for v = 1..n-1.
CheckVerdict check_theorem1(const GeneralizedCyclotomy& cyc, const BinaryField* field);

// L = n - delta when additionally 2 is a primitive root modulo every p_i^e_i.
CheckVerdict check_corollary(const GeneralizedCyclotomy& cyc);

// S_{(n/d)D_1}(alpha^v) as a sum over I_1 of products of prime-power class
// sums, checked both with the roots split off n (evaluated at exponent (n/d)v)
// and with the roots split off d (evaluated at exponent v).
CheckVerdict check_lemma3(const GeneralizedCyclotomy& cyc, u64 d, const BinaryField& field);

// Closed-form L for n = p1 p2, a_n = (1,1). Throws OutsideCaseTable unless
// p1 = p2 = 3 (mod 4).
u64 predicted_L_two_primes(u64 p1, u64 p2);

// For n = p1 p2 with a_n = (1,1): S(alpha^v) is 0 on all units when
// p1 = p2 = 3 (mod 4), and 1 on all units otherwise.
CheckVerdict check_lemma4(const GeneralizedCyclotomy& cyc, const BinaryField& field);

enum class CheckSelection { Lemma1, Lemma2, Lemma3, Lemma4, Theorem1, Corollary, All };

// Throws ParseError for unknown names.
CheckSelection parse_check_selection(const std::string& name);

// Runs the selected checks; lemma1-3 once per divisor. Without a field the
// spectral-only checks come back not applicable, with the reason as witness.
std::vector<CheckVerdict> run_checks(const GeneralizedCyclotomy& cyc, CheckSelection selection,
                                     const BinaryField* field);

}  // namespace dhseq
