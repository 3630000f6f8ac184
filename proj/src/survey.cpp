#include "dhseq/survey.hpp"

#include <atomic>
#include <exception>
#include <ostream>
#include <thread>

#include "dhseq/error.hpp"
#include "dhseq/lincomp.hpp"
#include "dhseq/sequence.hpp"
#include "dhseq/theorems.hpp"

namespace dhseq {

namespace {

template <typename T>
std::string blank_or(const std::optional<T>& v) {
    if (!v) return {};
    if constexpr (std::is_same_v<T, bool>) {
        return *v ? "true" : "false";
    } else {
        return std::to_string(*v);
    }
}

}  // namespace

bool SurveyRow::ok() const {
    return prediction_match.value_or(true) && theorem1_holds.value_or(true);
}

SurveyMode parse_survey_mode(const std::string& name) {
    if (name == "two-primes-11") return SurveyMode::TwoPrimes11;
    if (name == "default-all") return SurveyMode::DefaultAll;
    throw ParseError("unknown survey mode '" + name + "'");
}

SurveyRow survey_row(const Modulus& modulus, const VectorAssignment& assignment, unsigned degree_cap) {
    const GeneralizedCyclotomy cyc(modulus, assignment);
    const DHSequence seq = generate(cyc);

    SurveyRow row;
    row.n = modulus.n();
    row.factors = modulus.factor_string(';');
    row.assignment = assignment.to_string(';');
    row.delta = delta(row.n);
    row.L_bm = lincomp_bm(seq).L;
    row.L_gcd = lincomp_gcd(seq).L;
    if (row.L_bm != row.L_gcd) {
        throw MethodDisagreement("n=" + std::to_string(row.n) + ": L_bm=" + std::to_string(row.L_bm) +
                                 " L_gcd=" + std::to_string(row.L_gcd));
    }

    std::optional<BinaryField> field;
    if (order_of_two(row.n) <= degree_cap) field = build_field(row.n, degree_cap);
    if (field) {
        row.L_spectral = lincomp_spectral(seq, *field).L;
        if (*row.L_spectral != row.L_gcd) {
            throw MethodDisagreement("n=" + std::to_string(row.n) + ": L_spectral=" +
                                     std::to_string(*row.L_spectral) +
                                     " L_gcd=" + std::to_string(row.L_gcd));
        }
    }

    const CheckVerdict thm = check_theorem1(cyc, field ? &*field : nullptr);
    row.theorem1_applicable = thm.applicable;
    if (thm.applicable) row.theorem1_holds = thm.holds;

    if (modulus.size() == 2 && modulus.factors()[0].exponent == 1 &&
        modulus.factors()[1].exponent == 1 && assignment.at(row.n) == BitVector{1, 1}) {
        const u64 p1 = modulus.factors()[0].prime, p2 = modulus.factors()[1].prime;
        if (p1 % 4 == 3 && p2 % 4 == 3) {
            row.predicted_L = predicted_L_two_primes(p1, p2);
            row.prediction_match = *row.predicted_L == row.L_gcd;
        }
    }
    return row;
}

std::vector<SurveyRow> run_survey(const SurveyOptions& options) {
    if (options.max_n > kSurveyHardCap) {
        throw InvalidArgument("--max-n " + std::to_string(options.max_n) + " exceeds the hard cap " +
                              std::to_string(kSurveyHardCap));
    }
    std::vector<Modulus> moduli;
    for (auto& m : enumerate_moduli(options.max_n)) {
        if (options.mode == SurveyMode::TwoPrimes11) {
            if (m.size() != 2 || m.factors()[0].exponent != 1 || m.factors()[1].exponent != 1) continue;
        }
        moduli.push_back(std::move(m));
    }

    std::vector<SurveyRow> rows(moduli.size());
    std::vector<std::exception_ptr> errors(moduli.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < moduli.size(); i = next++) {
            try {
                const auto assignment = options.mode == SurveyMode::TwoPrimes11
                                            ? VectorAssignment::all_ones_top(moduli[i])
                                            : VectorAssignment::standard(moduli[i]);
                rows[i] = survey_row(moduli[i], assignment, options.degree_cap);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned count = std::max(1u, options.threads);
        for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

std::string csv_header() {
    return "n,factors,assignment,delta,L_bm,L_gcd,L_spectral,theorem1_applicable,theorem1_holds,"
           "predicted_L,prediction_match";
}

void write_csv(std::ostream& out, std::span<const SurveyRow> rows) {
    out << csv_header() << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.factors << ',' << r.assignment << ',' << r.delta << ',' << r.L_bm << ','
            << r.L_gcd << ',' << blank_or(r.L_spectral) << ','
            << (r.theorem1_applicable ? "true" : "false") << ',' << blank_or(r.theorem1_holds) << ','
            << blank_or(r.predicted_L) << ',' << blank_or(r.prediction_match) << '\n';
    }
}

}  // namespace dhseq
