#pragma once

// Elementary number theory for the generalized cyclotomy: validated moduli,
// primitive roots modulo prime powers, CRT, Legendre symbols, orders.

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dhseq {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    u64 value() const;
    // Euler phi of prime^exponent.
    u64 totient() const;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n = p_1^e_1 ... p_t^e_t with distinct odd primes and
// gcd(phi(p_i^e_i), phi(p_j^e_j)) = 2 for every pair i != j.
// Only validate_modulus() constructs one.
class Modulus {
public:
    u64 n() const noexcept { return n_; }
    std::span<const PrimePower> factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }

    // "3:1,7:1"
    std::string factor_string(char separator = ',') const;

    friend bool operator==(const Modulus&, const Modulus&) = default;

private:
    friend Modulus validate_modulus(std::vector<std::pair<u64, unsigned>> factor_list);
    std::vector<PrimePower> factors_;
    u64 n_ = 0;
};

// One residue per prime-power factor, in factor order.
struct CrtView {
    std::vector<u64> residues;
};

Modulus validate_modulus(std::vector<std::pair<u64, unsigned>> factor_list);

// Parses "p:e,p:e,..." (an omitted ":e" means exponent 1) and validates.
Modulus parse_modulus(const std::string& text);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

// Prime factorization in ascending order of primes.
std::vector<PrimePower> factorize(u64 n);

u64 gcd(u64 a, u64 b);
u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
// Inverse of a modulo m; throws InvalidArgument when gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m);

// Multiplicative order of a modulo m (gcd(a, m) must be 1).
u64 multiplicative_order(u64 a, u64 m);
bool is_primitive_root(u64 g, u64 prime, unsigned exponent);

// Smallest positive primitive root modulo p^e.
u64 primitive_root(u64 p, unsigned e);

CrtView crt_split(u64 x, const Modulus& modulus);
u64 crt_combine(const CrtView& view, const Modulus& modulus);

// g = primitive_root(p_i, e_i) mod p_i^e_i for every factor.
u64 combined_root(const Modulus& modulus);

// Euler's criterion; returns -1, 0 or +1.
int legendre(long long a, u64 p);

u64 order_of_two(u64 n);

std::vector<u64> proper_divisors_gt1(u64 n);
std::vector<u64> proper_divisors_gt1(const Modulus& modulus);

// All moduli n <= max_n accepted by validate_modulus, ascending.
std::vector<Modulus> enumerate_moduli(u64 max_n);

}  // namespace dhseq
