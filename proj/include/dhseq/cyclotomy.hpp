#pragma once

// Cyclotomic classes of order 2 modulo prime powers, the generalized classes
// D_0, D_1 of Z_d* selected by a bit vector a_d, and the partition {C_0, C_1}
// of Z_n that defines the sequence.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dhseq/numtheory.hpp"

namespace dhseq {

using BitVector = std::vector<std::uint8_t>;

// Sets of residues are materialized as sorted arrays only up to this size;
// membership queries work for any size.
inline constexpr u64 kMaterializeLimit = u64{1} << 16;

// A divisor d > 1 of n with its factorization (exponents are those of d).
struct Divisor {
    u64 value = 0;
    std::vector<PrimePower> factors;
};

std::vector<Divisor> divisors_of(const Modulus& modulus);
Divisor make_divisor(const Modulus& modulus, u64 d);

// D_0 = <g^2> and D_1 = g D_0 inside Z_{p^e}*.
class PrimePowerClasses {
public:
    u64 prime() const noexcept { return prime_; }
    unsigned exponent() const noexcept { return exponent_; }
    u64 modulus() const noexcept { return modulus_; }
    u64 root() const noexcept { return root_; }

    bool materialized() const noexcept { return !d0_.empty(); }
    std::span<const u64> d0() const noexcept { return d0_; }
    std::span<const u64> d1() const noexcept { return d1_; }

    // 0 or 1 for units, -1 otherwise.
    int class_of(u64 x) const;

private:
    friend PrimePowerClasses prime_power_classes(u64 p, unsigned e, u64 g);
    u64 prime_ = 0;
    unsigned exponent_ = 0;
    u64 modulus_ = 0;
    u64 root_ = 0;
    std::vector<u64> d0_, d1_;
    std::vector<std::int8_t> table_;
};

// Throws NotPrimitiveRoot if g does not generate Z_{p^e}*.
PrimePowerClasses prime_power_classes(u64 p, unsigned e, u64 g);

// One nonzero vector a_d per divisor d > 1 of n. Coordinates follow the
// ascending primes of d.
class VectorAssignment {
public:
    // No vectors assigned yet.
    explicit VectorAssignment(const Modulus& modulus);

    // a_d = (0,...,0,1) for every d.
    static VectorAssignment standard(const Modulus& modulus);
    // a_n = (1,...,1), every other divisor standard.
    static VectorAssignment all_ones_top(const Modulus& modulus);

    u64 n() const noexcept { return n_; }

    // Validates length and nonzeroness; throws InvalidArgument / ZeroVector.
    void set(u64 d, BitVector bits);
    bool has(u64 d) const { return vectors_.count(d) != 0; }
    // Throws MissingDivisorVector.
    const BitVector& at(u64 d) const;
    // Assigns the standard vector to every divisor that has none.
    void fill_defaults();
    bool complete() const;

    // True iff every assigned vector has odd coordinate sum.
    bool all_sums_odd() const;

    const std::map<u64, BitVector>& vectors() const noexcept { return vectors_; }

    // "3:1;7:1;21:11", ascending divisors.
    std::string to_string(char separator = ';') const;

    friend bool operator==(const VectorAssignment&, const VectorAssignment&) = default;

private:
    u64 n_ = 0;
    std::map<u64, std::size_t> prime_counts_;
    std::map<u64, BitVector> vectors_;
};

BitVector standard_vector(std::size_t length);
bool has_odd_sum(const BitVector& bits);

// Assignment spec: one "d:bits" entry per line, '#' comments and blank lines
// ignored, missing divisors take the standard vector. Throws ParseError.
VectorAssignment parse_assignment_spec(const Modulus& modulus, std::istream& in);
// Same entries on one line separated by ',' or ';' or whitespace.
VectorAssignment parse_assignment_inline(const Modulus& modulus, const std::string& text);

struct IndexSets {
    std::vector<BitVector> i0;
    std::vector<BitVector> i1;
};

// I_0 = tuples with even inner product against a, I_1 the rest. Throws ZeroVector.
IndexSets index_sets(const BitVector& a);

// Generalized classes D_0, D_1 of Z_d* for one divisor.
class ClassPair {
public:
    const Divisor& divisor() const noexcept { return divisor_; }
    u64 d() const noexcept { return divisor_.value; }
    const BitVector& vector() const noexcept { return a_; }

    bool materialized() const noexcept { return !d0_.empty(); }
    std::span<const u64> d0() const noexcept { return d0_; }
    std::span<const u64> d1() const noexcept { return d1_; }
    // b with D_1 = b D_0.
    u64 coset_rep() const noexcept { return coset_rep_; }

    // Class of x mod d: 0 or 1 for units, -1 otherwise.
    int class_of(u64 x) const;

    std::span<const std::shared_ptr<const PrimePowerClasses>> factor_classes() const noexcept {
        return factor_classes_;
    }

private:
    friend ClassPair generalized_classes(const Divisor&, const BitVector&, std::span<const u64>);
    Divisor divisor_;
    BitVector a_;
    std::vector<u64> d0_, d1_;
    u64 coset_rep_ = 0;
    std::vector<std::shared_ptr<const PrimePowerClasses>> factor_classes_;
};

// roots[k] is a primitive root modulo the k-th prime power of d.
ClassPair generalized_classes(const Divisor& divisor, const BitVector& a, std::span<const u64> roots);

// The full construction for one (modulus, assignment): class pairs for every
// divisor and the combined primitive root g.
class GeneralizedCyclotomy {
public:
    // Throws MissingDivisorVector if the assignment is incomplete.
    GeneralizedCyclotomy(Modulus modulus, VectorAssignment assignment);

    const Modulus& modulus() const noexcept { return modulus_; }
    const VectorAssignment& assignment() const noexcept { return assignment_; }
    u64 n() const noexcept { return modulus_.n(); }
    u64 root() const noexcept { return root_; }

    std::span<const ClassPair> class_pairs() const noexcept { return pairs_; }
    const ClassPair& pair_for(u64 d) const;

    // 1 iff i mod n lies in C_1.
    int bit(u64 i) const;

    // (n/d) D_j^(a_d, d) as a sorted subset of Z_n; requires a materialized pair.
    std::vector<u64> scaled_class(u64 d, int j) const;

private:
    Modulus modulus_;
    VectorAssignment assignment_;
    u64 root_ = 0;
    std::vector<ClassPair> pairs_;
};

struct Partition {
    std::vector<u64> c0;
    std::vector<u64> c1;
};

// C_0 = U (n/d) D_0, C_1 = U (n/d) D_1 + {0}, built from the explicit unions.
// Throws MissingDivisorVector; InvalidArgument for n above kMaterializeLimit.
Partition global_partition(const Modulus& modulus, const VectorAssignment& assignment);

}  // namespace dhseq
