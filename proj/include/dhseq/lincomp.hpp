#pragma once

// Linear complexity by three independent routes: Berlekamp-Massey on two
// periods, n - deg gcd(S(x), x^n + 1), and counting the zeros of S at the
// n-th roots of unity.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dhseq/binary_field.hpp"
#include "dhseq/gf2poly.hpp"
#include "dhseq/sequence.hpp"

namespace dhseq {

enum class LinComplexityMethod { BM, GCD, SPECTRAL };

std::string to_string(LinComplexityMethod method);

struct LinComplexityResult {
    u64 L = 0;
    LinComplexityMethod method = LinComplexityMethod::BM;
    // Number of v in [0, n) with S(alpha^v) = 0 (GCD and SPECTRAL only).
    std::optional<u64> zero_count;
    // The v themselves, ascending (SPECTRAL only).
    std::vector<u64> zero_set;
};

// S(x) = sum of x^i over i in C_1.
Poly2 sequence_polynomial(std::span<const std::uint8_t> bits);
Poly2 sequence_polynomial(const DHSequence& seq);

// The *_bits overloads accept any periodic bit string, one period long.
LinComplexityResult lincomp_bm(std::span<const std::uint8_t> period);
LinComplexityResult lincomp_gcd(std::span<const std::uint8_t> period);
// field.n() must equal the period length.
LinComplexityResult lincomp_spectral(std::span<const std::uint8_t> period, const BinaryField& field);

LinComplexityResult lincomp_bm(const DHSequence& seq);
LinComplexityResult lincomp_gcd(const DHSequence& seq);
LinComplexityResult lincomp_spectral(const DHSequence& seq, const BinaryField& field);

}  // namespace dhseq
