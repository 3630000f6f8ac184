#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dhseq/cyclotomy.hpp"
#include "dhseq/numtheory.hpp"

namespace dhseq {

// Largest period generate() will materialize.
inline constexpr u64 kMaxGeneratedPeriod = u64{1} << 28;

// One period of the sequence: bits[i] = 1 iff i is in C_1.
struct DHSequence {
    Modulus modulus;
    VectorAssignment assignment;
    BitVector bits;

    u64 n() const noexcept { return modulus.n(); }
    u64 weight() const;
    std::string to_string() const;
};

DHSequence generate(const GeneralizedCyclotomy& cyclotomy);
DHSequence generate(const Modulus& modulus, const VectorAssignment& assignment);

// 1 iff n = 3 (mod 4), i.e. S(1) = (n+1)/2 vanishes in GF(2).
int delta(u64 n);

// Sequence file: one line of '0'/'1', newline-terminated.
void write_sequence(std::ostream& out, const BitVector& bits);
// Throws ParseError on empty input or any character other than '0'/'1'.
BitVector read_sequence(std::istream& in);

// Sidecar metadata as key=value lines: n, factors, assignment, weight.
void write_metadata(std::ostream& out, const DHSequence& seq);
std::map<std::string, std::string> read_metadata(std::istream& in);

}  // namespace dhseq
