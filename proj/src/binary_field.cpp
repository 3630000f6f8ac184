#include "dhseq/binary_field.hpp"

#include <bit>
#include <cstdlib>
#include <string>

#include "dhseq/error.hpp"

namespace dhseq {

namespace {

constexpr unsigned kLimbs = kMaxFieldDegree / 64;

// (2^m - 1) / n as little-endian limbs; n must divide 2^m - 1.
std::vector<std::uint64_t> cofactor_exponent(unsigned m, u64 n) {
    std::vector<std::uint64_t> all_ones((m + 63) / 64, ~std::uint64_t{0});
    if (m % 64) all_ones.back() = (std::uint64_t{1} << (m % 64)) - 1;
    std::vector<std::uint64_t> q(all_ones.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = all_ones.size(); i-- > 0;) {
        const unsigned __int128 cur = (rem << 64) | all_ones[i];
        q[i] = static_cast<std::uint64_t>(cur / n);
        rem = cur % n;
    }
    return q;
}

}  // namespace

BinaryField::BinaryField(Poly2 modulus) : modulus_(std::move(modulus)) {
    const auto deg = modulus_.degree();
    if (!deg || *deg == 0 || *deg > kMaxFieldDegree) {
        throw InvalidArgument("field modulus must have degree 1.." + std::to_string(kMaxFieldDegree));
    }
    if (!is_irreducible(modulus_)) {
        throw InvalidArgument("field modulus " + modulus_.to_string() + " is reducible");
    }
    m_ = static_cast<unsigned>(*deg);
    limbs_ = (m_ + 63) / 64;
    Poly2 tail = modulus_;
    tail.set_coeff(m_, false);
    tail_.assign(tail.words().begin(), tail.words().end());
}

FieldElement BinaryField::add(const FieldElement& a, const FieldElement& b) noexcept {
    FieldElement r;
    for (unsigned i = 0; i < kLimbs; ++i) r[i] = a[i] ^ b[i];
    return r;
}

// product holds 2 * kLimbs words; on return the low limbs_ words are reduced.
void BinaryField::reduce(std::uint64_t* product) const {
    const unsigned total = 2 * kLimbs;
    std::uint64_t high[2 * kLimbs];
    while (true) {
        int top = -1;
        for (unsigned i = total; i-- > 0;) {
            if (product[i]) {
                top = static_cast<int>(i * 64 + 63 - std::countl_zero(product[i]));
                break;
            }
        }
        if (top < static_cast<int>(m_)) return;
        // high = product >> m, then clear those bits: x^m == tail.
        const unsigned ws = m_ / 64, bs = m_ % 64;
        const unsigned hwords = (static_cast<unsigned>(top) - m_) / 64 + 1;
        for (unsigned i = 0; i < hwords; ++i) {
            std::uint64_t v = ws + i < total ? product[ws + i] >> bs : 0;
            if (bs && ws + i + 1 < total) v |= product[ws + i + 1] << (64 - bs);
            high[i] = v;
        }
        if (bs) {
            product[ws] &= (std::uint64_t{1} << bs) - 1;
            for (unsigned i = ws + 1; i < total; ++i) product[i] = 0;
        } else {
            for (unsigned i = ws; i < total; ++i) product[i] = 0;
        }
        for (unsigned i = 0; i < hwords; ++i) {
            if (!high[i]) continue;
            for (std::size_t j = 0; j < tail_.size(); ++j) {
                std::uint64_t lo, hi;
                clmul64(high[i], tail_[j], lo, hi);
                product[i + j] ^= lo;
                if (i + j + 1 < total) product[i + j + 1] ^= hi;
            }
        }
    }
}

FieldElement BinaryField::mul(const FieldElement& a, const FieldElement& b) const {
    std::uint64_t product[2 * kLimbs] = {};
    for (unsigned i = 0; i < limbs_; ++i) {
        if (!a[i]) continue;
        for (unsigned j = 0; j < limbs_; ++j) {
            std::uint64_t lo, hi;
            clmul64(a[i], b[j], lo, hi);
            product[i + j] ^= lo;
            product[i + j + 1] ^= hi;
        }
    }
    reduce(product);
    FieldElement r{};
    for (unsigned i = 0; i < limbs_; ++i) r[i] = product[i];
    return r;
}

FieldElement BinaryField::pow(FieldElement base, u64 exp) const {
    FieldElement result = one();
    while (exp) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

FieldElement BinaryField::pow(FieldElement base, std::span<const std::uint64_t> exp) const {
    FieldElement result = one();
    for (std::uint64_t limb : exp) {
        for (int bit = 0; bit < 64; ++bit) {
            if ((limb >> bit) & 1) result = mul(result, base);
            base = mul(base, base);
        }
    }
    return result;
}

FieldElement BinaryField::from_poly(const Poly2& p) const {
    const Poly2 r = p % modulus_;
    FieldElement e{};
    const auto w = r.words();
    for (std::size_t i = 0; i < w.size(); ++i) e[i] = w[i];
    return e;
}

Poly2 BinaryField::to_poly(const FieldElement& a) const {
    return Poly2::from_words(std::vector<std::uint64_t>(a.begin(), a.begin() + limbs_));
}

bool BinaryField::has_order(const FieldElement& a, u64 order) const {
    if (pow(a, order) != one()) return false;
    if (order == 1) return true;
    for (const auto& pp : factorize(order)) {
        if (pow(a, order / pp.prime) == one()) return false;
    }
    return true;
}

FieldElement BinaryField::alpha_power(u64 k) const {
    k %= n_;
    if (!alpha_powers_.empty()) return alpha_powers_[k];
    return pow(alpha_, k);
}

BinaryField build_field(u64 n, unsigned degree_cap) {
    if (degree_cap == 0 || degree_cap > kMaxFieldDegree) {
        throw InvalidArgument("degree cap must lie in 1.." + std::to_string(kMaxFieldDegree));
    }
    const u64 m = order_of_two(n);
    if (m > degree_cap) throw DegreeCapExceeded(m, degree_cap);

    BinaryField field(smallest_irreducible(static_cast<unsigned>(m)));
    const auto exponent = cofactor_exponent(static_cast<unsigned>(m), n);

    // Candidates in ascending order of their coefficient value, from "x".
    bool found = false;
    const std::uint64_t limit = m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m);
    for (std::uint64_t value = 2; value < limit && !found; ++value) {
        FieldElement e{};
        e[0] = value;
        const FieldElement candidate = field.pow(e, exponent);
        if (field.has_order(candidate, n)) {
            field.alpha_ = candidate;
            found = true;
        }
    }
    if (!found) throw InvalidArgument("no element of order " + std::to_string(n) + " found");
    field.n_ = n;

    if (n <= kAlphaTableLimit) {
        field.alpha_powers_.reserve(n);
        FieldElement x = BinaryField::one();
        for (u64 k = 0; k < n; ++k) {
            field.alpha_powers_.push_back(x);
            x = field.mul(x, field.alpha_);
        }
    }
    return field;
}

unsigned degree_cap_from_env() {
    const char* env = std::getenv("DHSEQ_DEGREE_CAP");
    if (!env || !*env) return kDefaultDegreeCap;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > kMaxFieldDegree) return kDefaultDegreeCap;
    return static_cast<unsigned>(v);
}

FieldElement eval_poly(const Poly2& f, const FieldElement& x, const BinaryField& field) {
    FieldElement acc = BinaryField::zero();
    const auto deg = f.degree();
    if (!deg) return acc;
    for (std::size_t i = *deg + 1; i-- > 0;) {
        acc = field.mul(acc, x);
        if (f.coeff(i)) acc[0] ^= 1;
    }
    return acc;
}

FieldElement eval_index_set(std::span<const u64> exponents, u64 v, const BinaryField& field) {
    const u64 n = field.n();
    FieldElement acc = BinaryField::zero();
    v %= n;
    for (u64 a : exponents) acc = BinaryField::add(acc, field.alpha_power(mul_mod(a, v, n)));
    return acc;
}

}  // namespace dhseq
