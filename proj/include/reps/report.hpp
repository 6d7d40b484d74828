// Analysis reports: one word's runs, classification, per-lambda statistics
// and optional check outcomes, with JSON / CSV / text serialization.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reps/generation.hpp"
#include "reps/lambda_stats.hpp"
#include "reps/verify.hpp"

namespace reps {

// One run row. Generator fields hold 0-based indices into the report's runs
// list (the word positions inside Run stay 1-based); they are -1/-1/0/0 for
// primary runs and absent from serialized forms.
struct RunReport {
    Run run;
    bool primary = true;
    int gen_left = -1;
    int gen_right = -1;
    int alpha = 0;
    int sigma = 0;

    friend bool operator==(const RunReport& a, const RunReport& b) {
        return a.run == b.run && a.run.exponent == b.run.exponent && a.primary == b.primary &&
               a.gen_left == b.gen_left && a.gen_right == b.gen_right && a.alpha == b.alpha &&
               a.sigma == b.sigma;
    }
};

struct LambdaSection {
    LambdaStats stats;
    BoundsReport bounds;

    friend bool operator==(const LambdaSection&, const LambdaSection&) = default;
};

struct AnalysisReport {
    std::string source;
    int length = 0;
    int alphabet = 0;
    int factor = 3;
    std::vector<RunReport> runs;           // sorted by (start, period, end)
    std::vector<LambdaSection> lambdas;    // one section per requested lambda
    std::optional<std::vector<CheckOutcome>> checks;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

// Full analysis of one word: runs, classification at `factor`, statistics and
// bound status per lambda, and (when requested) the whole check battery run
// on this word alone.
AnalysisReport analyze_word(const Word& w, const std::string& source,
                            const std::vector<int>& lambdas, int factor, bool with_checks,
                            const std::string& family = "", long long param = 0);

// Serialized forms. JSON round-trips exactly: parse_report(to_json(r)) == r.
// CSV carries the run table only, one row per run, exponents split into
// exact numerator/denominator columns. Text is the human-readable summary;
// all three show the same numbers.
std::string to_json(const AnalysisReport& r);
AnalysisReport parse_report(const std::string& json_text);  // throws std::runtime_error
std::string to_csv(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

}  // namespace reps
