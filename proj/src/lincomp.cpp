#include "dhseq/lincomp.hpp"

#include "dhseq/error.hpp"

namespace dhseq {

std::string to_string(LinComplexityMethod method) {
    switch (method) {
        case LinComplexityMethod::BM: return "bm";
        case LinComplexityMethod::GCD: return "gcd";
        case LinComplexityMethod::SPECTRAL: return "spectral";
    }
    return "?";
}

Poly2 sequence_polynomial(std::span<const std::uint8_t> bits) { return Poly2::from_bits(bits); }

Poly2 sequence_polynomial(const DHSequence& seq) { return sequence_polynomial(seq.bits); }

LinComplexityResult lincomp_bm(std::span<const std::uint8_t> period) {
    BitVector two_periods(period.begin(), period.end());
    two_periods.insert(two_periods.end(), period.begin(), period.end());
    return {berlekamp_massey(two_periods), LinComplexityMethod::BM, std::nullopt, {}};
}

LinComplexityResult lincomp_gcd(std::span<const std::uint8_t> period) {
    const u64 n = period.size();
    if (n == 0) throw InvalidArgument("empty period");
    const Poly2 g = poly_gcd(sequence_polynomial(period), Poly2::xn_plus_1(n));
    const u64 zeros = *g.degree();
    return {n - zeros, LinComplexityMethod::GCD, zeros, {}};
}

LinComplexityResult lincomp_spectral(std::span<const std::uint8_t> period, const BinaryField& field) {
    const u64 n = period.size();
    if (field.n() != n) {
        throw InvalidArgument("field was built for n = " + std::to_string(field.n()) +
                              ", sequence has period " + std::to_string(n));
    }
    std::vector<u64> support;
    for (u64 i = 0; i < n; ++i) {
        if (period[i]) support.push_back(i);
    }
    LinComplexityResult r;
    r.method = LinComplexityMethod::SPECTRAL;
    for (u64 v = 0; v < n; ++v) {
        if (BinaryField::is_zero(eval_index_set(support, v, field))) r.zero_set.push_back(v);
    }
    r.zero_count = r.zero_set.size();
    r.L = n - *r.zero_count;
    return r;
}

LinComplexityResult lincomp_bm(const DHSequence& seq) { return lincomp_bm(seq.bits); }

LinComplexityResult lincomp_gcd(const DHSequence& seq) { return lincomp_gcd(seq.bits); }

LinComplexityResult lincomp_spectral(const DHSequence& seq, const BinaryField& field) {
    return lincomp_spectral(seq.bits, field);
}

}  // namespace dhseq
