#include "dhseq/theorems.hpp"

#include <algorithm>

#include "dhseq/error.hpp"
#include "dhseq/lincomp.hpp"
#include "dhseq/sequence.hpp"

namespace dhseq {

namespace {

std::string d_tag(const std::string& base, u64 d) { return base + "[d=" + std::to_string(d) + "]"; }

CheckVerdict not_applicable(std::string name, std::optional<std::string> why = std::nullopt) {
    return {std::move(name), false, false, std::move(why)};
}

CheckVerdict passed(std::string name) { return {std::move(name), true, true, std::nullopt}; }

CheckVerdict failed(std::string name, std::string witness) {
    return {std::move(name), true, false, std::move(witness)};
}

std::vector<u64> scale_sorted(std::span<const u64> xs, u64 factor, u64 modulus) {
    std::vector<u64> out;
    out.reserve(xs.size());
    for (u64 x : xs) out.push_back(mul_mod(x, factor, modulus));
    std::sort(out.begin(), out.end());
    return out;
}

// First element of a not in b (both sorted), for witnesses.
std::optional<u64> first_difference(const std::vector<u64>& a, std::span<const u64> b) {
    for (u64 x : a) {
        if (!std::binary_search(b.begin(), b.end(), x)) return x;
    }
    return std::nullopt;
}

CheckVerdict lemma1_for_pair(const ClassPair& pair, u64 g, std::string name) {
    if (!has_odd_sum(pair.vector())) return not_applicable(std::move(name));
    const u64 d = pair.d();
    g %= d;
    if (pair.materialized()) {
        for (int j = 0; j < 2; ++j) {
            const auto from = j == 0 ? pair.d0() : pair.d1();
            const auto to = j == 0 ? pair.d1() : pair.d0();
            const auto image = scale_sorted(from, g, d);
            if (!std::equal(image.begin(), image.end(), to.begin(), to.end())) {
                const auto x = first_difference(image, to);
                return failed(std::move(name), "g*D" + std::to_string(j) + " contains " +
                                                   std::to_string(x.value_or(0)) + " outside D" +
                                                   std::to_string(1 - j));
            }
        }
        return passed(std::move(name));
    }
    for (u64 x = 1; x < d; ++x) {
        const int c = pair.class_of(x);
        if (c < 0) continue;
        if (pair.class_of(mul_mod(g, x, d)) != 1 - c) {
            return failed(std::move(name), "x=" + std::to_string(x));
        }
    }
    return passed(std::move(name));
}

// S(alpha^v) for every v in [0, n).
std::vector<FieldElement> spectrum(const GeneralizedCyclotomy& cyc, const BinaryField& field) {
    const u64 n = cyc.n();
    std::vector<u64> support;
    for (u64 i = 0; i < n; ++i) {
        if (cyc.bit(i)) support.push_back(i);
    }
    std::vector<FieldElement> values(n);
    for (u64 v = 0; v < n; ++v) values[v] = eval_index_set(support, v, field);
    return values;
}

void require_field_for(const GeneralizedCyclotomy& cyc, const BinaryField& field) {
    if (field.n() != cyc.n()) {
        throw InvalidArgument("field was built for n = " + std::to_string(field.n()) +
                              ", construction has n = " + std::to_string(cyc.n()));
    }
}

// Index of prime p among the modulus factors.
std::size_t factor_index(const Modulus& modulus, u64 p) {
    for (std::size_t i = 0; i < modulus.size(); ++i) {
        if (modulus.factors()[i].prime == p) return i;
    }
    throw InvalidArgument("prime " + std::to_string(p) + " does not divide n");
}

}  // namespace

u64 CrtSplitCoefficients::combination() const {
    u64 acc = 0;
    for (std::size_t k = 0; k < b.size(); ++k) {
        acc = (acc + mul_mod(b[k], n / divisor.factors[k].value(), n)) % n;
    }
    return acc;
}

CrtSplitCoefficients crt_split(const Modulus& modulus, u64 d) {
    CrtSplitCoefficients split;
    split.n = modulus.n();
    split.divisor = make_divisor(modulus, d);
    // Dividing the congruence by n/d leaves sum_k b_k d / q_k = 1 (mod d).
    for (const auto& pp : split.divisor.factors) {
        const u64 q = pp.value();
        split.b.push_back(inverse_mod((d / q) % q, q));
    }
    return split;
}

FieldElement split_root(const BinaryField& field, const CrtSplitCoefficients& split, std::size_t k) {
    const u64 n = split.n;
    return field.alpha_power(mul_mod(split.b.at(k), n / split.divisor.factors.at(k).value(), n));
}

CheckVerdict check_lemma1(const Modulus& modulus, u64 d, const BitVector& a) {
    const Divisor div = make_divisor(modulus, d);
    const u64 g = combined_root(modulus);
    std::vector<u64> roots;
    for (const auto& pp : div.factors) roots.push_back(g % pp.value());
    return lemma1_for_pair(generalized_classes(div, a, roots), g, d_tag("lemma1", d));
}

CheckVerdict check_lemma1(const GeneralizedCyclotomy& cyc, u64 d) {
    return lemma1_for_pair(cyc.pair_for(d), cyc.root(), d_tag("lemma1", d));
}

CheckVerdict check_lemma2(const GeneralizedCyclotomy& cyc, u64 d, const BinaryField* field) {
    std::string name = d_tag("lemma2", d);
    const ClassPair& pair = cyc.pair_for(d);
    if (!has_odd_sum(pair.vector())) return not_applicable(std::move(name));
    const u64 n = cyc.n();
    const u64 g = cyc.root();

    const auto scaled0 = cyc.scaled_class(d, 0);
    const auto scaled1 = cyc.scaled_class(d, 1);
    const auto image = scale_sorted(scaled1, g, n);
    if (image != scaled0) {
        const auto x = first_difference(image, scaled0);
        return failed(std::move(name),
                      "set form: g*(n/d)D1 contains " + std::to_string(x.value_or(0)) +
                          " outside (n/d)D0");
    }
    if (!field) return {std::move(name), true, true, "set form only (no field)"};
    require_field_for(cyc, *field);
    for (u64 v = 1; v < n; ++v) {
        const auto lhs = eval_index_set(scaled1, mul_mod(v, g, n), *field);
        const auto rhs = eval_index_set(scaled0, v, *field);
        if (lhs != rhs) return failed(std::move(name), "evaluation form fails at v=" + std::to_string(v));
    }
    return passed(std::move(name));
}

CheckVerdict check_theorem1(const GeneralizedCyclotomy& cyc, const BinaryField* field) {
    std::string name = "theorem1";
    if (!cyc.assignment().all_sums_odd()) return not_applicable(std::move(name));
    const u64 n = cyc.n();
    const DHSequence seq = generate(cyc);
    const u64 L = lincomp_gcd(seq).L;
    const u64 bound = (n + 1) / 2 - static_cast<u64>(delta(n));
    if (L < bound) {
        return failed(std::move(name), "L=" + std::to_string(L) + " < " + std::to_string(bound));
    }
    if (field) {
        require_field_for(cyc, *field);
        const auto s = spectrum(cyc, *field);
        const u64 g = cyc.root();
        for (u64 v = 1; v < n; ++v) {
            if (BinaryField::add(s[v], s[mul_mod(g, v, n)]) != BinaryField::one()) {
                return failed(std::move(name), "S(alpha^v)+S(alpha^gv) != 1 at v=" + std::to_string(v));
            }
        }
    }
    return passed(std::move(name));
}

CheckVerdict check_corollary(const GeneralizedCyclotomy& cyc) {
    std::string name = "corollary";
    if (!cyc.assignment().all_sums_odd()) return not_applicable(std::move(name));
    for (const auto& pp : cyc.modulus().factors()) {
        if (!is_primitive_root(2, pp.prime, pp.exponent)) {
            return not_applicable(std::move(name), "2 is not a primitive root modulo " +
                                                       std::to_string(pp.value()));
        }
    }
    const u64 n = cyc.n();
    const u64 L = lincomp_gcd(generate(cyc)).L;
    const u64 expected = n - static_cast<u64>(delta(n));
    if (L != expected) {
        return failed(std::move(name), "L=" + std::to_string(L) + " != " + std::to_string(expected));
    }
    return passed(std::move(name));
}

CheckVerdict check_lemma3(const GeneralizedCyclotomy& cyc, u64 d, const BinaryField& field) {
    std::string name = d_tag("lemma3", d);
    require_field_for(cyc, field);
    const Modulus& modulus = cyc.modulus();
    const u64 n = cyc.n();
    const ClassPair& pair = cyc.pair_for(d);
    const Divisor& div = pair.divisor();
    const std::size_t m = div.factors.size();
    const IndexSets sets = index_sets(pair.vector());
    const auto scaled1 = cyc.scaled_class(d, 1);

    const CrtSplitCoefficients global = crt_split(modulus, n);
    const CrtSplitCoefficients local = crt_split(modulus, d);
    if (global.combination() != 1 % n || local.combination() != n / d) {
        return failed(std::move(name), "CRT split coefficients violate their congruence");
    }

    // Exponent e with beta^(x * step) = alpha^(e x), per prime of d and per form.
    std::vector<u64> global_base(m), local_base(m);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t gk = factor_index(modulus, div.factors[k].prime);
        const u64 q_global = modulus.factors()[gk].value();
        global_base[k] = mul_mod(mul_mod(global.b[gk], n / q_global, n), n / d, n);
        local_base[k] = mul_mod(local.b[k], n / div.factors[k].value(), n);
    }

    // sum over I_1 of prod_k S_{i_k}(alpha^(base_k v)).
    auto product_form = [&](const std::vector<u64>& base, u64 v) {
        std::vector<std::array<FieldElement, 2>> part(m);
        for (std::size_t k = 0; k < m; ++k) {
            const auto& classes = *pair.factor_classes()[k];
            const u64 step = mul_mod(base[k], v, n);
            part[k][0] = eval_index_set(classes.d0(), step, field);
            part[k][1] = eval_index_set(classes.d1(), step, field);
        }
        FieldElement total = BinaryField::zero();
        for (const auto& tuple : sets.i1) {
            FieldElement term = BinaryField::one();
            for (std::size_t k = 0; k < m; ++k) term = field.mul(term, part[k][tuple[k]]);
            total = BinaryField::add(total, term);
        }
        return total;
    };

    for (u64 v = 1; v < n; ++v) {
        const auto lhs = eval_index_set(scaled1, v, field);
        if (product_form(global_base, v) != lhs) {
            return failed(std::move(name), "roots split off n disagree at v=" + std::to_string(v));
        }
        if (product_form(local_base, v) != lhs) {
            return failed(std::move(name), "roots split off d disagree at v=" + std::to_string(v));
        }
    }
    return passed(std::move(name));
}

u64 predicted_L_two_primes(u64 p1, u64 p2) {
    validate_modulus({{p1, 1}, {p2, 1}});
    if (p1 % 4 != 3 || p2 % 4 != 3) {
        throw OutsideCaseTable("no closed form for primes " + std::to_string(p1) + ", " +
                               std::to_string(p2) + " unless both are 3 mod 4");
    }
    const bool first3 = p1 % 8 == 3;
    const bool second3 = p2 % 8 == 3;
    if (first3 && second3) return p1 + p2 - 1;
    if (first3) return p1 + (p2 - 1) / 2;
    if (second3) return p2 + (p1 - 1) / 2;
    return (p1 + p2) / 2;
}

CheckVerdict check_lemma4(const GeneralizedCyclotomy& cyc, const BinaryField& field) {
    std::string name = "lemma4";
    const Modulus& modulus = cyc.modulus();
    if (modulus.size() != 2 || modulus.factors()[0].exponent != 1 ||
        modulus.factors()[1].exponent != 1) {
        return not_applicable(std::move(name), "n is not a product of two distinct primes");
    }
    if (cyc.assignment().at(cyc.n()) != BitVector{1, 1}) {
        return not_applicable(std::move(name), "a_n is not (1,1)");
    }
    require_field_for(cyc, field);
    const u64 p1 = modulus.factors()[0].prime, p2 = modulus.factors()[1].prime;
    const bool both3 = p1 % 4 == 3 && p2 % 4 == 3;
    const FieldElement expected = both3 ? BinaryField::zero() : BinaryField::one();
    const auto s = spectrum(cyc, field);
    const u64 n = cyc.n();
    for (u64 v = 1; v < n; ++v) {
        if (gcd(v, n) != 1) continue;
        if (s[v] != expected) {
            return failed(std::move(name), "S(alpha^v) != " + std::string(both3 ? "0" : "1") +
                                               " at v=" + std::to_string(v));
        }
    }
    return passed(std::move(name));
}

CheckSelection parse_check_selection(const std::string& name) {
    if (name == "lemma1") return CheckSelection::Lemma1;
    if (name == "lemma2") return CheckSelection::Lemma2;
    if (name == "lemma3") return CheckSelection::Lemma3;
    if (name == "lemma4") return CheckSelection::Lemma4;
    if (name == "theorem1") return CheckSelection::Theorem1;
    if (name == "corollary") return CheckSelection::Corollary;
    if (name == "all") return CheckSelection::All;
    throw ParseError("unknown check '" + name + "'");
}

std::vector<CheckVerdict> run_checks(const GeneralizedCyclotomy& cyc, CheckSelection selection,
                                     const BinaryField* field) {
    auto wants = [&](CheckSelection s) { return selection == CheckSelection::All || selection == s; };
    const std::string no_field = "no field for this n within the degree cap";
    std::vector<CheckVerdict> out;
    for (const auto& pair : cyc.class_pairs()) {
        if (wants(CheckSelection::Lemma1)) out.push_back(check_lemma1(cyc, pair.d()));
    }
    for (const auto& pair : cyc.class_pairs()) {
        if (wants(CheckSelection::Lemma2)) out.push_back(check_lemma2(cyc, pair.d(), field));
    }
    for (const auto& pair : cyc.class_pairs()) {
        if (!wants(CheckSelection::Lemma3)) break;
        out.push_back(field ? check_lemma3(cyc, pair.d(), *field)
                            : not_applicable(d_tag("lemma3", pair.d()), no_field));
    }
    if (wants(CheckSelection::Lemma4)) {
        out.push_back(field ? check_lemma4(cyc, *field) : not_applicable("lemma4", no_field));
    }
    if (wants(CheckSelection::Theorem1)) out.push_back(check_theorem1(cyc, field));
    if (wants(CheckSelection::Corollary)) out.push_back(check_corollary(cyc));
    return out;
}

}  // namespace dhseq
