#pragma once

// GF(2^m) for m up to 512 and the primitive n-th root of unity alpha used
// for spectral evaluation of sequence polynomials.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "dhseq/gf2poly.hpp"
#include "dhseq/numtheory.hpp"

namespace dhseq {

inline constexpr unsigned kMaxFieldDegree = 512;
inline constexpr unsigned kDefaultDegreeCap = 64;
// alpha^k is tabulated for every k < n when n is at most this.
inline constexpr u64 kAlphaTableLimit = u64{1} << 22;

// Polynomial basis coordinates; limbs past the field degree stay zero.
using FieldElement = std::array<std::uint64_t, kMaxFieldDegree / 64>;

class BinaryField {
public:
    // GF(2)[x] / (modulus). Throws InvalidArgument unless irreducible of
    // degree 1..kMaxFieldDegree. alpha is left unset (order 1).
    explicit BinaryField(Poly2 modulus);

    unsigned degree() const noexcept { return m_; }
    const Poly2& modulus_poly() const noexcept { return modulus_; }

    // Order of alpha; 1 if no root of unity was attached.
    u64 n() const noexcept { return n_; }
    const FieldElement& alpha() const noexcept { return alpha_; }
    // alpha^(k mod n)
    FieldElement alpha_power(u64 k) const;

    static FieldElement zero() noexcept { return {}; }
    static FieldElement one() noexcept {
        FieldElement e{};
        e[0] = 1;
        return e;
    }
    static bool is_zero(const FieldElement& a) noexcept { return a == FieldElement{}; }

    static FieldElement add(const FieldElement& a, const FieldElement& b) noexcept;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement square(const FieldElement& a) const { return mul(a, a); }
    FieldElement pow(FieldElement base, u64 exp) const;
    // Exponent as little-endian 64-bit limbs.
    FieldElement pow(FieldElement base, std::span<const std::uint64_t> exp) const;

    FieldElement from_poly(const Poly2& p) const;
    Poly2 to_poly(const FieldElement& a) const;

    // True iff a^k = 1 exactly for k = order (checks order / q for primes q | order).
    bool has_order(const FieldElement& a, u64 order) const;

private:
    friend BinaryField build_field(u64 n, unsigned degree_cap);
    void reduce(std::uint64_t* product) const;

    Poly2 modulus_;
    unsigned m_ = 0;
    unsigned limbs_ = 0;
    // modulus minus its leading term.
    std::vector<std::uint64_t> tail_;
    u64 n_ = 1;
    FieldElement alpha_ = one();
    std::vector<FieldElement> alpha_powers_;
};

// GF(2^m), m = ord_n(2), with the smallest irreducible modulus, plus alpha of
// order exactly n. Throws DegreeCapExceeded when m > degree_cap.
BinaryField build_field(u64 n, unsigned degree_cap = kDefaultDegreeCap);

// DHSEQ_DEGREE_CAP if set and valid, else kDefaultDegreeCap.
unsigned degree_cap_from_env();

// Horner evaluation of f at x.
FieldElement eval_poly(const Poly2& f, const FieldElement& x, const BinaryField& field);

// S_A(alpha^v) = sum over a in A of alpha^(a v).
FieldElement eval_index_set(std::span<const u64> exponents, u64 v, const BinaryField& field);

}  // namespace dhseq
