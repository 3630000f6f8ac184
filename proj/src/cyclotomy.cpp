#include "dhseq/cyclotomy.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "dhseq/error.hpp"

namespace dhseq {

namespace {

// CRT over the prime powers of a divisor.
u64 combine_residues(std::span<const u64> residues, const Divisor& divisor) {
    const u64 d = divisor.value;
    u64 x = 0;
    for (std::size_t k = 0; k < divisor.factors.size(); ++k) {
        const u64 q = divisor.factors[k].value();
        const u64 cofactor = d / q;
        const u64 coeff = mul_mod(residues[k] % q, inverse_mod(cofactor % q, q), q);
        x = (x + mul_mod(coeff, cofactor, d)) % d;
    }
    return x;
}

// Odometer over the cartesian product of parts; false once it wraps.
bool advance(std::vector<std::size_t>& idx, const std::vector<std::span<const u64>>& parts) {
    for (std::size_t k = idx.size(); k-- > 0;) {
        if (++idx[k] < parts[k].size()) return true;
        idx[k] = 0;
    }
    return false;
}

}  // namespace

std::vector<Divisor> divisors_of(const Modulus& modulus) {
    std::vector<Divisor> out;
    for (u64 d : proper_divisors_gt1(modulus)) out.push_back(make_divisor(modulus, d));
    return out;
}

Divisor make_divisor(const Modulus& modulus, u64 d) {
    if (d < 2 || modulus.n() % d != 0) {
        throw InvalidArgument(std::to_string(d) + " is not a divisor > 1 of " +
                              std::to_string(modulus.n()));
    }
    Divisor div{d, {}};
    for (const auto& pp : modulus.factors()) {
        unsigned l = 0;
        u64 rest = d;
        while (rest % pp.prime == 0) {
            rest /= pp.prime;
            ++l;
        }
        if (l) div.factors.push_back({pp.prime, l});
    }
    return div;
}

int PrimePowerClasses::class_of(u64 x) const {
    x %= modulus_;
    if (!table_.empty()) return table_[x];
    if (x % prime_ == 0) return -1;
    // Squares of Z_{p^e}* are exactly the units that are squares mod p.
    return legendre(static_cast<long long>(x % prime_), prime_) == 1 ? 0 : 1;
}

PrimePowerClasses prime_power_classes(u64 p, unsigned e, u64 g) {
    if (!is_primitive_root(g, p, e)) {
        throw NotPrimitiveRoot(std::to_string(g) + " is not a primitive root modulo " +
                               std::to_string(p) + "^" + std::to_string(e));
    }
    PrimePowerClasses c;
    c.prime_ = p;
    c.exponent_ = e;
    c.modulus_ = PrimePower{p, e}.value();
    c.root_ = g % c.modulus_;
    if (c.modulus_ <= kMaterializeLimit) {
        const u64 q = c.modulus_;
        const u64 half = PrimePower{p, e}.totient() / 2;
        const u64 g2 = mul_mod(c.root_, c.root_, q);
        c.table_.assign(q, -1);
        u64 x = 1;
        for (u64 j = 0; j < half; ++j) {
            c.d0_.push_back(x);
            const u64 y = mul_mod(x, c.root_, q);
            c.d1_.push_back(y);
            c.table_[x] = 0;
            c.table_[y] = 1;
            x = mul_mod(x, g2, q);
        }
        std::sort(c.d0_.begin(), c.d0_.end());
        std::sort(c.d1_.begin(), c.d1_.end());
    }
    return c;
}

BitVector standard_vector(std::size_t length) {
    BitVector v(length, 0);
    if (length) v.back() = 1;
    return v;
}

bool has_odd_sum(const BitVector& bits) {
    unsigned s = 0;
    for (auto b : bits) s += b;
    return s % 2 == 1;
}

VectorAssignment::VectorAssignment(const Modulus& modulus) : n_(modulus.n()) {
    for (const auto& div : divisors_of(modulus)) prime_counts_[div.value] = div.factors.size();
}

VectorAssignment VectorAssignment::standard(const Modulus& modulus) {
    VectorAssignment a(modulus);
    a.fill_defaults();
    return a;
}

VectorAssignment VectorAssignment::all_ones_top(const Modulus& modulus) {
    VectorAssignment a(modulus);
    a.set(modulus.n(), BitVector(modulus.size(), 1));
    a.fill_defaults();
    return a;
}

void VectorAssignment::set(u64 d, BitVector bits) {
    const auto it = prime_counts_.find(d);
    if (it == prime_counts_.end()) {
        throw InvalidArgument(std::to_string(d) + " is not a divisor > 1 of " + std::to_string(n_));
    }
    if (bits.size() != it->second) {
        throw InvalidArgument("divisor " + std::to_string(d) + " needs a vector of length " +
                              std::to_string(it->second) + ", got " + std::to_string(bits.size()));
    }
    for (auto& b : bits) {
        if (b > 1) throw InvalidArgument("vector entries must be 0 or 1");
    }
    if (std::none_of(bits.begin(), bits.end(), [](auto b) { return b != 0; })) {
        throw ZeroVector("vector for divisor " + std::to_string(d) + " is zero");
    }
    vectors_[d] = std::move(bits);
}

const BitVector& VectorAssignment::at(u64 d) const {
    const auto it = vectors_.find(d);
    if (it == vectors_.end()) throw MissingDivisorVector(d);
    return it->second;
}

void VectorAssignment::fill_defaults() {
    for (const auto& [d, count] : prime_counts_) {
        if (!has(d)) vectors_[d] = standard_vector(count);
    }
}

bool VectorAssignment::complete() const { return vectors_.size() == prime_counts_.size(); }

bool VectorAssignment::all_sums_odd() const {
    return std::all_of(vectors_.begin(), vectors_.end(),
                       [](const auto& kv) { return has_odd_sum(kv.second); });
}

std::string VectorAssignment::to_string(char separator) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, bits] : vectors_) {
        if (!first) os << separator;
        first = false;
        os << d << ':';
        for (auto b : bits) os << static_cast<int>(b);
    }
    return os.str();
}

namespace {

void apply_entry(VectorAssignment& a, const std::string& entry) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == entry.size()) {
        throw ParseError("malformed assignment entry '" + entry + "' (expected d:bits)");
    }
    const std::string ds = entry.substr(0, colon);
    const std::string bs = entry.substr(colon + 1);
    if (!std::all_of(ds.begin(), ds.end(), ::isdigit) ||
        !std::all_of(bs.begin(), bs.end(), [](char c) { return c == '0' || c == '1'; })) {
        throw ParseError("malformed assignment entry '" + entry + "' (expected d:bits)");
    }
    u64 d = 0;
    try {
        d = std::stoull(ds);
    } catch (const std::exception&) {
        throw ParseError("divisor out of range in '" + entry + "'");
    }
    BitVector bits;
    for (char c : bs) bits.push_back(static_cast<std::uint8_t>(c - '0'));
    if (a.has(d)) throw ParseError("divisor " + ds + " assigned twice");
    try {
        a.set(d, std::move(bits));
    } catch (const Error& e) {
        throw ParseError("bad assignment entry '" + entry + "': " + e.what());
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

VectorAssignment parse_assignment_spec(const Modulus& modulus, std::istream& in) {
    VectorAssignment a(modulus);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        apply_entry(a, line);
    }
    a.fill_defaults();
    return a;
}

VectorAssignment parse_assignment_inline(const Modulus& modulus, const std::string& text) {
    VectorAssignment a(modulus);
    std::string normalized = text;
    std::replace_if(
        normalized.begin(), normalized.end(), [](char c) { return c == ',' || c == ';'; }, ' ');
    std::istringstream is(normalized);
    std::string entry;
    while (is >> entry) apply_entry(a, entry);
    a.fill_defaults();
    return a;
}

IndexSets index_sets(const BitVector& a) {
    if (std::none_of(a.begin(), a.end(), [](auto b) { return b != 0; })) {
        throw ZeroVector("index sets need a nonzero vector");
    }
    const std::size_t m = a.size();
    IndexSets sets;
    for (u64 mask = 0; mask < (u64{1} << m); ++mask) {
        BitVector tuple(m);
        unsigned parity = 0;
        // Lexicographic order with the first coordinate most significant.
        for (std::size_t k = 0; k < m; ++k) {
            tuple[k] = static_cast<std::uint8_t>((mask >> (m - 1 - k)) & 1);
            parity ^= tuple[k] & a[k];
        }
        (parity ? sets.i1 : sets.i0).push_back(std::move(tuple));
    }
    return sets;
}

int ClassPair::class_of(u64 x) const {
    x %= divisor_.value;
    int j = 0;
    for (std::size_t k = 0; k < factor_classes_.size(); ++k) {
        const int c = factor_classes_[k]->class_of(x);
        if (c < 0) return -1;
        j ^= c & a_[k];
    }
    return j;
}

ClassPair generalized_classes(const Divisor& divisor, const BitVector& a, std::span<const u64> roots) {
    if (divisor.value < 2) throw InvalidArgument("divisor must exceed 1");
    if (a.size() != divisor.factors.size() || roots.size() != divisor.factors.size()) {
        throw InvalidArgument("vector and roots must have one entry per prime of the divisor");
    }
    const IndexSets sets = index_sets(a);

    ClassPair pair;
    pair.divisor_ = divisor;
    pair.a_ = a;
    for (std::size_t k = 0; k < divisor.factors.size(); ++k) {
        const auto& pp = divisor.factors[k];
        pair.factor_classes_.push_back(std::make_shared<const PrimePowerClasses>(
            prime_power_classes(pp.prime, pp.exponent, roots[k])));
    }

    if (divisor.value <= kMaterializeLimit) {
        // D_j = CRT^-1 of the union over I_j of D_{i_1} x ... x D_{i_m}.
        const std::size_t m = divisor.factors.size();
        for (int j = 0; j < 2; ++j) {
            auto& out = j == 0 ? pair.d0_ : pair.d1_;
            for (const auto& tuple : (j == 0 ? sets.i0 : sets.i1)) {
                std::vector<std::span<const u64>> parts(m);
                for (std::size_t k = 0; k < m; ++k) {
                    parts[k] = tuple[k] ? pair.factor_classes_[k]->d1() : pair.factor_classes_[k]->d0();
                }
                std::vector<std::size_t> idx(m, 0);
                std::vector<u64> residues(m);
                do {
                    for (std::size_t k = 0; k < m; ++k) residues[k] = parts[k][idx[k]];
                    out.push_back(combine_residues(residues, divisor));
                } while (advance(idx, parts));
            }
            std::sort(out.begin(), out.end());
        }
        pair.coset_rep_ = mul_mod(pair.d1_.front(), inverse_mod(pair.d0_.front(), divisor.value),
                                  divisor.value);
    } else {
        u64 min0 = 0, min1 = 0;
        for (u64 x = 1; x < divisor.value && (!min0 || !min1); ++x) {
            const int c = pair.class_of(x);
            if (c == 0 && !min0) min0 = x;
            if (c == 1 && !min1) min1 = x;
        }
        pair.coset_rep_ = mul_mod(min1, inverse_mod(min0, divisor.value), divisor.value);
    }
    return pair;
}

GeneralizedCyclotomy::GeneralizedCyclotomy(Modulus modulus, VectorAssignment assignment)
    : modulus_(std::move(modulus)), assignment_(std::move(assignment)) {
    if (assignment_.n() != modulus_.n()) {
        throw InvalidArgument("assignment was built for a different modulus");
    }
    root_ = combined_root(modulus_);
    for (const auto& div : divisors_of(modulus_)) {
        const BitVector& a = assignment_.at(div.value);
        std::vector<u64> roots;
        for (const auto& pp : div.factors) roots.push_back(root_ % pp.value());
        pairs_.push_back(generalized_classes(div, a, roots));
    }
}

const ClassPair& GeneralizedCyclotomy::pair_for(u64 d) const {
    const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), d,
                                     [](const ClassPair& p, u64 v) { return p.d() < v; });
    if (it == pairs_.end() || it->d() != d) {
        throw InvalidArgument(std::to_string(d) + " is not a divisor > 1 of " +
                              std::to_string(n()));
    }
    return *it;
}

int GeneralizedCyclotomy::bit(u64 i) const {
    const u64 n = modulus_.n();
    i %= n;
    if (i == 0) return 1;
    const u64 scale = gcd(i, n);
    return pair_for(n / scale).class_of(i / scale);
}

std::vector<u64> GeneralizedCyclotomy::scaled_class(u64 d, int j) const {
    const ClassPair& pair = pair_for(d);
    if (!pair.materialized()) throw InvalidArgument("class pair too large to materialize");
    const u64 n = modulus_.n();
    std::vector<u64> out;
    for (u64 x : (j % 2 == 0 ? pair.d0() : pair.d1())) out.push_back(mul_mod(n / d, x, n));
    std::sort(out.begin(), out.end());
    return out;
}

Partition global_partition(const Modulus& modulus, const VectorAssignment& assignment) {
    if (modulus.n() > kMaterializeLimit) {
        throw InvalidArgument("partition of Z_n is only materialized for n <= 65536");
    }
    const GeneralizedCyclotomy cyc(modulus, assignment);
    Partition part;
    part.c1.push_back(0);
    for (const auto& pair : cyc.class_pairs()) {
        for (int j = 0; j < 2; ++j) {
            auto scaled = cyc.scaled_class(pair.d(), j);
            auto& out = j == 0 ? part.c0 : part.c1;
            out.insert(out.end(), scaled.begin(), scaled.end());
        }
    }
    std::sort(part.c0.begin(), part.c0.end());
    std::sort(part.c1.begin(), part.c1.end());
    return part;
}

}  // namespace dhseq
