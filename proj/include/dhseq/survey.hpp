#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dhseq/binary_field.hpp"
#include "dhseq/cyclotomy.hpp"

namespace dhseq {

inline constexpr u64 kSurveyDefaultMaxN = 2000;
inline constexpr u64 kSurveyHardCap = 20000;

struct SurveyRow {
    u64 n = 0;
    std::string factors;     // "3:1;7:1"
    std::string assignment;  // "3:1;7:1;21:11"
    int delta = 0;
    u64 L_bm = 0;
    u64 L_gcd = 0;
    std::optional<u64> L_spectral;
    bool theorem1_applicable = false;
    std::optional<bool> theorem1_holds;
    std::optional<u64> predicted_L;
    std::optional<bool> prediction_match;

    // True unless the row contradicts a prediction or the bound.
    bool ok() const;
};

enum class SurveyMode { TwoPrimes11, DefaultAll };

// Throws ParseError.
SurveyMode parse_survey_mode(const std::string& name);

struct SurveyOptions {
    u64 max_n = kSurveyDefaultMaxN;
    SurveyMode mode = SurveyMode::DefaultAll;
    // Fields above this degree are skipped; L_spectral is left blank.
    unsigned degree_cap = kDefaultDegreeCap;
    unsigned threads = 1;
};

// One row; throws MethodDisagreement if BM, GCD (and SPECTRAL, when
// available) do not agree.
SurveyRow survey_row(const Modulus& modulus, const VectorAssignment& assignment, unsigned degree_cap);

// Rows sorted by n. Throws InvalidArgument above kSurveyHardCap.
std::vector<SurveyRow> run_survey(const SurveyOptions& options);

std::string csv_header();
void write_csv(std::ostream& out, std::span<const SurveyRow> rows);

}  // namespace dhseq
