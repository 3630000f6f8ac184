#pragma once

// Dense polynomials over GF(2), packed 64 coefficients per word, plus the
// two sequence-side algorithms built on them: Euclid's gcd and
// Berlekamp-Massey LFSR synthesis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dhseq {

class Poly2 {
public:
    Poly2() = default;

    static Poly2 one() { return monomial(0); }
    static Poly2 monomial(std::size_t k);
    // x^n + 1
    static Poly2 xn_plus_1(std::size_t n);
    // Sum of x^e over the given exponents (repeated exponents cancel).
    static Poly2 from_exponents(std::span<const std::uint64_t> exponents);
    // Coefficient of x^i is bits[i].
    static Poly2 from_bits(std::span<const std::uint8_t> bits);
    // Word k holds coefficients 64k .. 64k+63.
    static Poly2 from_words(std::vector<std::uint64_t> words);

    bool is_zero() const noexcept { return words_.empty(); }
    // Empty for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    std::size_t weight() const noexcept;

    bool coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, bool value);
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    Poly2& operator+=(const Poly2& other);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator%(const Poly2& a, const Poly2& b);
    friend Poly2 operator/(const Poly2& a, const Poly2& b);
    friend bool operator==(const Poly2&, const Poly2&) = default;

    Poly2 square() const;
    Poly2 shifted_left(std::size_t k) const;

    // "x^5 + x^2 + 1", "0" for zero.
    std::string to_string() const;

private:
    void trim();
    std::vector<std::uint64_t> words_;
};

struct PolyDivision {
    Poly2 quotient;
    Poly2 remainder;
};

// Throws InvalidArgument on division by zero.
PolyDivision divmod(const Poly2& a, const Poly2& b);

// Monic gcd; throws BothZero.
Poly2 poly_gcd(const Poly2& a, const Poly2& b);

Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m);

// Rabin's test with a small-degree Ben-Or prefilter.
bool is_irreducible(const Poly2& f);

// Lexicographically smallest irreducible polynomial of degree m.
Poly2 smallest_irreducible(unsigned m);

// Carry-less 64x64 -> 128 multiply; writes low and high words.
void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi);

// Linear complexity of a finite bit string.
std::size_t berlekamp_massey(std::span<const std::uint8_t> bits);

}  // namespace dhseq
