#include "dhseq/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "dhseq/error.hpp"

namespace dhseq {

namespace {

constexpr u64 kMaxModulus = u64{1} << 63;

bool checked_mul(u64 a, u64 b, u64& out) {
    return !__builtin_mul_overflow(a, b, &out);
}

u64 ipow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (!checked_mul(r, base, r)) throw InvalidArgument("integer overflow in prime power");
    }
    return r;
}

bool miller_rabin_round(u64 n, u64 a, u64 d, unsigned s) {
    a %= n;
    if (a == 0) return true;
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const u64 f = pollard_rho(n);
    factor_into(f, primes);
    factor_into(n / f, primes);
}

std::vector<u64> distinct_prime_divisors(u64 n) {
    std::vector<u64> out;
    for (const auto& pp : factorize(n)) out.push_back(pp.prime);
    return out;
}

u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

std::string factor_label(const PrimePower& pp) {
    return std::to_string(pp.prime) + "^" + std::to_string(pp.exponent);
}

}  // namespace

u64 PrimePower::value() const { return ipow(prime, exponent); }

u64 PrimePower::totient() const { return ipow(prime, exponent - 1) * (prime - 1); }

std::string Modulus::factor_string(char separator) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << separator;
        os << factors_[i].prime << ':' << factors_[i].exponent;
    }
    return os.str();
}

u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 inverse_mod(u64 a, u64 m) {
    if (m == 1) return 0;
    // Extended Euclid on signed 128-bit to keep intermediate values exact.
    __int128 old_r = static_cast<__int128>(a % m), r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    }
    if (old_r != 1) {
        throw InvalidArgument(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    }
    __int128 x = old_s % static_cast<__int128>(m);
    if (x < 0) x += m;
    return static_cast<u64>(x);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : kSmall) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is exact below 3.3e24.
    for (u64 a : kSmall) {
        if (!miller_rabin_round(n, a, d, s)) return false;
    }
    return true;
}

std::vector<PrimePower> factorize(u64 n) {
    if (n == 0) throw InvalidArgument("cannot factor 0");
    std::vector<u64> primes;
    for (u64 p = 2; p < 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<PrimePower> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().prime == p) {
            ++out.back().exponent;
        } else {
            out.push_back({p, 1});
        }
    }
    return out;
}

Modulus validate_modulus(std::vector<std::pair<u64, unsigned>> factor_list) {
    if (factor_list.empty()) throw InvalidArgument("empty factor list");
    for (const auto& [p, e] : factor_list) {
        if (e == 0) throw InvalidArgument("exponent of " + std::to_string(p) + " must be >= 1");
        if (p == 2) throw EvenOrRepeatedPrime("the prime 2 is not allowed; all primes must be odd");
        if (!is_prime(p)) throw NotPrime(p);
    }
    std::sort(factor_list.begin(), factor_list.end());
    for (std::size_t i = 1; i < factor_list.size(); ++i) {
        if (factor_list[i].first == factor_list[i - 1].first) {
            throw EvenOrRepeatedPrime("prime " + std::to_string(factor_list[i].first) +
                                      " is listed more than once");
        }
    }

    Modulus m;
    u64 n = 1;
    for (const auto& [p, e] : factor_list) {
        PrimePower pp{p, e};
        if (!checked_mul(n, pp.value(), n) || n >= kMaxModulus) {
            throw InvalidArgument("modulus must be below 2^63");
        }
        m.factors_.push_back(pp);
    }
    m.n_ = n;

    for (std::size_t i = 0; i < m.factors_.size(); ++i) {
        for (std::size_t j = i + 1; j < m.factors_.size(); ++j) {
            const u64 g = gcd(m.factors_[i].totient(), m.factors_[j].totient());
            if (g != 2) {
                throw GcdConditionViolated(i, j, factor_label(m.factors_[i]),
                                           factor_label(m.factors_[j]), g);
            }
        }
    }
    return m;
}

Modulus parse_modulus(const std::string& text) {
    std::vector<std::pair<u64, unsigned>> list;
    std::string item;
    std::istringstream is(text);
    auto parse_u64 = [&](const std::string& s) -> u64 {
        if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) {
            throw ParseError("malformed factor list '" + text + "'");
        }
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw ParseError("number out of range in factor list '" + text + "'");
        }
    };
    while (std::getline(is, item, ',')) {
        const auto colon = item.find(':');
        const u64 p = parse_u64(item.substr(0, colon));
        u64 e = 1;
        if (colon != std::string::npos) e = parse_u64(item.substr(colon + 1));
        if (e > 64) throw ParseError("exponent too large in '" + item + "'");
        list.emplace_back(p, static_cast<unsigned>(e));
    }
    if (list.empty()) throw ParseError("empty factor list");
    return validate_modulus(std::move(list));
}

u64 multiplicative_order(u64 a, u64 m) {
    if (m == 1) return 1;
    if (gcd(a, m) != 1) {
        throw InvalidArgument(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    }
    // Start from the Carmichael function and strip prime factors.
    u64 lambda = 1;
    for (const auto& pp : factorize(m)) {
        u64 l = pp.totient();
        if (pp.prime == 2 && pp.exponent >= 3) l /= 2;
        lambda = lcm(lambda, l);
    }
    u64 order = lambda;
    for (u64 q : distinct_prime_divisors(lambda)) {
        while (order % q == 0 && pow_mod(a, order / q, m) == 1) order /= q;
    }
    return order;
}

bool is_primitive_root(u64 g, u64 prime, unsigned exponent) {
    const PrimePower pp{prime, exponent};
    const u64 q = pp.value();
    if (gcd(g % q, q) != 1) return false;
    const u64 phi = pp.totient();
    for (u64 r : distinct_prime_divisors(phi)) {
        if (pow_mod(g, phi / r, q) == 1) return false;
    }
    return true;
}

u64 primitive_root(u64 p, unsigned e) {
    if (p < 3 || !is_prime(p)) throw InvalidArgument("primitive_root needs an odd prime");
    if (e == 0) throw InvalidArgument("primitive_root needs exponent >= 1");
    const u64 q = PrimePower{p, e}.value();
    for (u64 g = 2; g < q; ++g) {
        if (is_primitive_root(g, p, e)) return g;
    }
    // p = 3, e = 1 is found above; this point is unreachable for odd p.
    throw InvalidArgument("no primitive root found");
}

CrtView crt_split(u64 x, const Modulus& modulus) {
    CrtView view;
    for (const auto& pp : modulus.factors()) view.residues.push_back(x % pp.value());
    return view;
}

u64 crt_combine(const CrtView& view, const Modulus& modulus) {
    if (view.residues.size() != modulus.size()) {
        throw InvalidArgument("CRT view has the wrong number of residues");
    }
    const u64 n = modulus.n();
    u64 x = 0;
    for (std::size_t i = 0; i < modulus.size(); ++i) {
        const u64 q = modulus.factors()[i].value();
        const u64 cofactor = n / q;
        const u64 coeff = mul_mod(view.residues[i] % q, inverse_mod(cofactor % q, q), q);
        x = (x + mul_mod(coeff, cofactor, n)) % n;
    }
    return x;
}

u64 combined_root(const Modulus& modulus) {
    CrtView view;
    for (const auto& pp : modulus.factors()) {
        view.residues.push_back(primitive_root(pp.prime, pp.exponent));
    }
    return crt_combine(view, modulus);
}

int legendre(long long a, u64 p) {
    long long r = a % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    const u64 t = pow_mod(static_cast<u64>(r), (p - 1) / 2, p);
    if (t == 0) return 0;
    return t == 1 ? 1 : -1;
}

u64 order_of_two(u64 n) {
    if (n < 3 || n % 2 == 0) throw InvalidArgument("order_of_two needs an odd n > 1");
    return multiplicative_order(2, n);
}

std::vector<u64> proper_divisors_gt1(u64 n) {
    if (n < 2) return {};
    std::vector<u64> divs{1};
    for (const auto& pp : factorize(n)) {
        const std::size_t count = divs.size();
        u64 power = 1;
        for (unsigned k = 1; k <= pp.exponent; ++k) {
            power *= pp.prime;
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
        }
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(divs.begin());
    return divs;
}

std::vector<u64> proper_divisors_gt1(const Modulus& modulus) {
    return proper_divisors_gt1(modulus.n());
}

std::vector<Modulus> enumerate_moduli(u64 max_n) {
    std::vector<Modulus> out;
    for (u64 n = 3; n <= max_n; n += 2) {
        const auto f = factorize(n);
        bool ok = true;
        for (std::size_t i = 0; i < f.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < f.size() && ok; ++j) {
                ok = gcd(f[i].totient(), f[j].totient()) == 2;
            }
        }
        if (!ok) continue;
        std::vector<std::pair<u64, unsigned>> list;
        for (const auto& pp : f) list.emplace_back(pp.prime, pp.exponent);
        out.push_back(validate_modulus(std::move(list)));
    }
    return out;
}

}  // namespace dhseq
