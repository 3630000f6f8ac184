#include "dhseq/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "dhseq/error.hpp"
#include "dhseq/numtheory.hpp"

namespace dhseq {

namespace {

using Words = std::vector<std::uint64_t>;

std::uint64_t spread32(std::uint32_t x) {
    std::uint64_t v = x;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v << 2)) & 0x3333333333333333ull;
    v = (v | (v << 1)) & 0x5555555555555555ull;
    return v;
}

// dst ^= src << shift. dst must be large enough.
void xor_shifted(Words& dst, std::span<const std::uint64_t> src, std::size_t shift) {
    const std::size_t ws = shift / 64;
    const unsigned bs = shift % 64;
    if (bs == 0) {
        for (std::size_t j = 0; j < src.size(); ++j) dst[j + ws] ^= src[j];
        return;
    }
    for (std::size_t j = 0; j < src.size(); ++j) {
        dst[j + ws] ^= src[j] << bs;
        const std::uint64_t carry = src[j] >> (64 - bs);
        if (carry) dst[j + ws + 1] ^= carry;
    }
}

std::size_t top_bit(const Words& w) {
    return (w.size() - 1) * 64 + (63 - std::countl_zero(w.back()));
}

void trim_words(Words& w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
}

// Reduces r modulo b in place, optionally collecting the quotient.
void reduce_in_place(Words& r, const Poly2& b, Words* quotient) {
    const std::size_t db = *b.degree();
    const auto bw = b.words();
    trim_words(r);
    while (!r.empty()) {
        const std::size_t dr = top_bit(r);
        if (dr < db) break;
        const std::size_t shift = dr - db;
        xor_shifted(r, bw, shift);
        if (quotient) (*quotient)[shift / 64] |= std::uint64_t{1} << (shift % 64);
        trim_words(r);
    }
}

}  // namespace

void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo, std::uint64_t& hi) {
    unsigned __int128 table[16];
    table[0] = 0;
    table[1] = a;
    for (int i = 2; i < 16; i += 2) {
        table[i] = table[i / 2] << 1;
        table[i + 1] = table[i] ^ a;
    }
    unsigned __int128 r = 0;
    for (int k = 15; k >= 0; --k) {
        r = (r << 4) ^ table[(b >> (4 * k)) & 15];
    }
    lo = static_cast<std::uint64_t>(r);
    hi = static_cast<std::uint64_t>(r >> 64);
}

Poly2 Poly2::monomial(std::size_t k) {
    Poly2 p;
    p.set_coeff(k, true);
    return p;
}

Poly2 Poly2::xn_plus_1(std::size_t n) {
    Poly2 p = monomial(n);
    p.words_[0] ^= 1;
    p.trim();
    return p;
}

Poly2 Poly2::from_exponents(std::span<const std::uint64_t> exponents) {
    Poly2 p;
    for (auto e : exponents) p.set_coeff(e, !p.coeff(e));
    return p;
}

Poly2 Poly2::from_bits(std::span<const std::uint8_t> bits) {
    Poly2 p;
    p.words_.assign((bits.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) p.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    p.trim();
    return p;
}

Poly2 Poly2::from_words(std::vector<std::uint64_t> words) {
    Poly2 p;
    p.words_ = std::move(words);
    p.trim();
    return p;
}

std::optional<std::size_t> Poly2::degree() const noexcept {
    if (words_.empty()) return std::nullopt;
    return top_bit(words_);
}

std::size_t Poly2::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool Poly2::coeff(std::size_t i) const noexcept {
    const std::size_t k = i / 64;
    return k < words_.size() && ((words_[k] >> (i % 64)) & 1);
}

void Poly2::set_coeff(std::size_t i, bool value) {
    const std::size_t k = i / 64;
    if (value) {
        if (k >= words_.size()) words_.resize(k + 1, 0);
        words_[k] |= std::uint64_t{1} << (i % 64);
    } else if (k < words_.size()) {
        words_[k] &= ~(std::uint64_t{1} << (i % 64));
        trim();
    }
}

void Poly2::trim() { trim_words(words_); }

Poly2& Poly2::operator+=(const Poly2& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Words r(a.words_.size() + b.words_.size(), 0);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        if (!a.words_[i]) continue;
        for (std::size_t j = 0; j < b.words_.size(); ++j) {
            std::uint64_t lo, hi;
            clmul64(a.words_[i], b.words_[j], lo, hi);
            r[i + j] ^= lo;
            r[i + j + 1] ^= hi;
        }
    }
    return Poly2::from_words(std::move(r));
}

PolyDivision divmod(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    Words r(a.words().begin(), a.words().end());
    r.resize(r.size() + 1, 0);
    Words q(r.size(), 0);
    reduce_in_place(r, b, &q);
    return {Poly2::from_words(std::move(q)), Poly2::from_words(std::move(r))};
}

Poly2 operator%(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    Words r(a.words_.begin(), a.words_.end());
    r.resize(r.size() + 1, 0);
    reduce_in_place(r, b, nullptr);
    return Poly2::from_words(std::move(r));
}

Poly2 operator/(const Poly2& a, const Poly2& b) { return divmod(a, b).quotient; }

Poly2 Poly2::square() const {
    Words r(words_.size() * 2, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r[2 * i] = spread32(static_cast<std::uint32_t>(words_[i]));
        r[2 * i + 1] = spread32(static_cast<std::uint32_t>(words_[i] >> 32));
    }
    return from_words(std::move(r));
}

Poly2 Poly2::shifted_left(std::size_t k) const {
    if (is_zero()) return {};
    Words r(words_.size() + k / 64 + 1, 0);
    xor_shifted(r, words_, k);
    return from_words(std::move(r));
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = *degree() + 1; i-- > 0;) {
        if (!coeff(i)) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << '1';
        } else if (i == 1) {
            os << 'x';
        } else {
            os << "x^" << i;
        }
    }
    return os.str();
}

Poly2 poly_gcd(const Poly2& a, const Poly2& b) {
    if (a.is_zero() && b.is_zero()) throw BothZero();
    // Over GF(2) every nonzero polynomial is already monic.
    Poly2 x = a, y = b;
    while (!y.is_zero()) {
        Poly2 r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m) { return (a * b) % m; }

bool is_irreducible(const Poly2& f) {
    const auto deg = f.degree();
    if (!deg || *deg == 0) return false;
    const std::size_t m = *deg;
    if (m == 1) return true;
    if (!f.coeff(0)) return false;

    const Poly2 x = Poly2::monomial(1);
    std::vector<std::uint64_t> rabin_points;
    for (const auto& pp : factorize(m)) rabin_points.push_back(m / pp.prime);

    Poly2 h = x;  // x^(2^i) mod f
    for (std::size_t i = 1; i <= m; ++i) {
        h = h.square() % f;
        const bool prefilter = i <= 16 && 2 * i <= m;
        const bool rabin = std::find(rabin_points.begin(), rabin_points.end(), i) != rabin_points.end();
        if (prefilter || rabin) {
            const Poly2 g = poly_gcd(h + x, f);
            if (g != Poly2::one()) return false;
        }
    }
    return h == x % f;
}

Poly2 smallest_irreducible(unsigned m) {
    if (m == 0) throw InvalidArgument("degree must be positive");
    if (m == 1) return Poly2::from_words({0b10});  // x
    const std::uint64_t limit = m >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << m);
    for (std::uint64_t tail = 1; tail < limit; tail += 2) {
        Poly2 f = Poly2::monomial(m) + Poly2::from_words({tail});
        if (is_irreducible(f)) return f;
    }
    throw InvalidArgument("no irreducible polynomial found");
}

std::size_t berlekamp_massey(std::span<const std::uint8_t> bits) {
    const std::size_t n = bits.size();
    const std::size_t words = n / 64 + 2;
    // rev bit j holds s[n-1-j], so s[k-i] = rev[n-1-k+i].
    Words rev(words + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (bits[i]) {
            const std::size_t j = n - 1 - i;
            rev[j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    auto window = [&](std::size_t pos) -> std::uint64_t {
        const std::size_t w = pos / 64;
        const unsigned b = pos % 64;
        if (w >= rev.size()) return 0;
        std::uint64_t v = rev[w] >> b;
        if (b && w + 1 < rev.size()) v |= rev[w + 1] << (64 - b);
        return v;
    };

    Words c(words, 0), b(words, 0), t;
    c[0] = b[0] = 1;
    std::size_t len = 0, shift = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t offset = n - 1 - k;
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j <= len / 64; ++j) acc ^= c[j] & window(offset + 64 * j);
        if ((std::popcount(acc) & 1) == 0) {
            ++shift;
            continue;
        }
        if (2 * len <= k) {
            t = c;
            xor_shifted(c, std::span<const std::uint64_t>(b.data(), words - shift / 64 - 1), shift);
            len = k + 1 - len;
            b = std::move(t);
            shift = 1;
        } else {
            xor_shifted(c, std::span<const std::uint64_t>(b.data(), words - shift / 64 - 1), shift);
            ++shift;
        }
    }
    return len;
}

}  // namespace dhseq
