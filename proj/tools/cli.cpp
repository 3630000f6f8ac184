#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "dhseq/binary_field.hpp"
#include "dhseq/cyclotomy.hpp"
#include "dhseq/error.hpp"
#include "dhseq/lincomp.hpp"
#include "dhseq/sequence.hpp"
#include "dhseq/survey.hpp"
#include "dhseq/theorems.hpp"

namespace dhseq::cli {

namespace {

struct AssignmentFlags {
    bool standard = false;
    bool all_ones_top = false;
    std::string spec_file;
    std::string inline_spec;

    void attach(CLI::App& cmd) {
        auto* a = cmd.add_flag("--default", standard, "a_d = (0,...,0,1) for every divisor");
        auto* b = cmd.add_flag("--all-ones-top", all_ones_top, "a_n = (1,...,1), other divisors default");
        auto* c = cmd.add_option("--spec", spec_file, "assignment spec file (d:bits per line)");
        auto* d = cmd.add_option("--assignment", inline_spec, "inline entries, e.g. 21:11");
        a->excludes(b)->excludes(c)->excludes(d);
        b->excludes(c)->excludes(d);
        c->excludes(d);
    }

    VectorAssignment resolve(const Modulus& modulus) const {
        if (all_ones_top) return VectorAssignment::all_ones_top(modulus);
        if (!spec_file.empty()) {
            std::ifstream in(spec_file);
            if (!in) throw InvalidArgument("cannot open spec file " + spec_file);
            return parse_assignment_spec(modulus, in);
        }
        if (!inline_spec.empty()) return parse_assignment_inline(modulus, inline_spec);
        return VectorAssignment::standard(modulus);
    }
};

std::optional<BinaryField> try_build_field(u64 n, unsigned cap) {
    if (order_of_two(n) > cap) return std::nullopt;
    return build_field(n, cap);
}

int cmd_generate(const std::string& factors, const AssignmentFlags& flags, const std::string& out_path,
                 std::ostream& out) {
    const Modulus modulus = parse_modulus(factors);
    const DHSequence seq = generate(modulus, flags.resolve(modulus));
    if (out_path.empty()) {
        write_sequence(out, seq.bits);
        return kOk;
    }
    std::ofstream file(out_path);
    std::ofstream meta(out_path + ".meta");
    if (!file || !meta) throw InvalidArgument("cannot write " + out_path);
    write_sequence(file, seq.bits);
    write_metadata(meta, seq);
    out << "wrote " << out_path << " (n=" << seq.n() << ", weight=" << seq.weight() << ")\n";
    return kOk;
}

int cmd_lincomp(const std::string& factors, const std::string& input, const AssignmentFlags& flags,
                const std::string& method, unsigned cap, std::ostream& out, std::ostream& err) {
    BitVector bits;
    if (!input.empty()) {
        std::ifstream in(input);
        if (!in) throw InvalidArgument("cannot open " + input);
        bits = read_sequence(in);
    } else {
        const Modulus modulus = parse_modulus(factors);
        bits = generate(modulus, flags.resolve(modulus)).bits;
    }
    const u64 n = bits.size();
    out << "n=" << n << '\n';

    std::vector<u64> values;
    if (method == "bm" || method == "all") {
        const auto r = lincomp_bm(bits);
        out << "bm L=" << r.L << '\n';
        values.push_back(r.L);
    }
    if (method == "gcd" || method == "all") {
        const auto r = lincomp_gcd(bits);
        out << "gcd L=" << r.L << " zero_count=" << *r.zero_count << '\n';
        values.push_back(r.L);
    }
    if (method == "spectral" || method == "all") {
        if (n % 2 == 0 || n < 3) {
            if (method == "spectral") throw InvalidArgument("spectral method needs an odd period > 1");
            out << "spectral unavailable: period must be odd and > 1\n";
        } else {
            try {
                const BinaryField field = build_field(n, cap);
                const auto r = lincomp_spectral(bits, field);
                out << "spectral L=" << r.L << " zero_count=" << *r.zero_count << '\n';
                values.push_back(r.L);
            } catch (const DegreeCapExceeded& e) {
                if (method == "spectral") throw;
                out << "spectral unavailable: " << e.what() << '\n';
            }
        }
    }
    if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end()) {
        err << "error: methods disagree\n";
        return kDisagreement;
    }
    return kOk;
}

int cmd_verify(const std::string& factors, const AssignmentFlags& flags, const std::string& check,
               unsigned cap, std::ostream& out) {
    const CheckSelection selection = parse_check_selection(check);
    const Modulus modulus = parse_modulus(factors);
    const GeneralizedCyclotomy cyc(modulus, flags.resolve(modulus));
    const auto field = try_build_field(modulus.n(), cap);
    if (!field) {
        out << "note: ord_n(2) = " << order_of_two(modulus.n()) << " exceeds the degree cap " << cap
            << "; spectral checks skipped\n";
    }
    bool all_hold = true;
    for (const auto& v : run_checks(cyc, selection, field ? &*field : nullptr)) {
        out << v.name << " applicable=" << (v.applicable ? "true" : "false")
            << " holds=" << (v.applicable ? (v.holds ? "true" : "false") : "-")
            << " witness=" << v.witness.value_or("-") << '\n';
        if (v.applicable && !v.holds) all_hold = false;
    }
    return all_hold ? kOk : kCheckFailed;
}

int cmd_survey(const SurveyOptions& options, const std::string& out_path, std::ostream& out) {
    const auto rows = run_survey(options);
    const auto bad = std::count_if(rows.begin(), rows.end(), [](const SurveyRow& r) { return !r.ok(); });
    if (out_path.empty()) {
        write_csv(out, rows);
    } else {
        std::ofstream file(out_path);
        if (!file) throw InvalidArgument("cannot write " + out_path);
        write_csv(file, rows);
        out << "wrote " << rows.size() << " rows to " << out_path << '\n';
    }
    if (bad) {
        out << bad << " row(s) contradict a prediction or the bound\n";
        return kCheckFailed;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized cyclotomic binary sequences and their linear complexity", "dhseq"};
    app.require_subcommand(1);

    unsigned cap = degree_cap_from_env();
    std::string factors, input, method = "all", check = "all", out_path, mode;
    AssignmentFlags flags;
    SurveyOptions survey;

    auto* gen = app.add_subcommand("generate", "write one period of the sequence");
    gen->add_option("--factors", factors, "p:e,p:e,...")->required();
    flags.attach(*gen);
    gen->add_option("--out", out_path, "sequence file (metadata goes to <file>.meta)");

    auto* lc = app.add_subcommand("lincomp", "linear complexity by one or all methods");
    auto* lc_factors = lc->add_option("--factors", factors, "p:e,p:e,...");
    auto* lc_input = lc->add_option("--input", input, "sequence file");
    lc_factors->excludes(lc_input);
    flags.attach(*lc);
    lc->add_option("--method", method)->check(CLI::IsMember({"bm", "gcd", "spectral", "all"}));
    lc->add_option("--degree-cap", cap)->check(CLI::Range(1u, kMaxFieldDegree));

    auto* ver = app.add_subcommand("verify", "run the lemma and theorem checkers");
    ver->add_option("--check", check)
        ->check(CLI::IsMember({"lemma1", "lemma2", "lemma3", "lemma4", "theorem1", "corollary", "all"}));
    ver->add_option("--factors", factors)->required();
    flags.attach(*ver);
    ver->add_option("--degree-cap", cap)->check(CLI::Range(1u, kMaxFieldDegree));

    auto* sur = app.add_subcommand("survey", "parameter sweep to CSV");
    sur->add_option("--max-n", survey.max_n)->check(CLI::Range(u64{3}, kSurveyHardCap));
    sur->add_option("--mode", mode)->required()->check(CLI::IsMember({"two-primes-11", "default-all"}));
    sur->add_option("--out", out_path, "CSV file (stdout if omitted)");
    sur->add_option("--threads", survey.threads)->check(CLI::Range(1u, 256u));
    sur->add_option("--degree-cap", cap)->check(CLI::Range(1u, kMaxFieldDegree));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*gen) return cmd_generate(factors, flags, out_path, out);
        if (*lc) {
            if (factors.empty() && input.empty()) {
                err << "error: lincomp needs --factors or --input\n";
                return kInputError;
            }
            return cmd_lincomp(factors, input, flags, method, cap, out, err);
        }
        if (*ver) return cmd_verify(factors, flags, check, cap, out);
        if (*sur) {
            survey.mode = parse_survey_mode(mode);
            survey.degree_cap = cap;
            return cmd_survey(survey, out_path, out);
        }
    } catch (const MethodDisagreement& e) {
        err << "error: " << e.what() << '\n';
        return kDisagreement;
    } catch (const GcdConditionViolated& e) {
        err << "error: GcdConditionViolated: " << e.what() << '\n';
        return kInputError;
    } catch (const DegreeCapExceeded& e) {
        err << "error: DegreeCapExceeded: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace dhseq::cli
