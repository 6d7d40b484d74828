// The verification harness: a configurable corpus of words, a battery of
// machine-checked invariants over it, and the two non-assertive survey modes
// (maximum run counts, generation-factor sweep).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reps/lambda_stats.hpp"
#include "reps/word.hpp"

namespace reps {

struct CorpusWord {
    Word word;
    std::string source;     // e.g. "exhaustive", "wk(7)", "random[3]"
    std::string family;     // family name when generated, else empty
    long long param = 0;    // family parameter when generated
};

struct CorpusSpec {
    // Exhaustive enumeration: every word over the alphabet up to the length.
    std::vector<std::pair<int, int>> exhaustive;  // (alphabet_size, max_len)
    // Generated families with explicit parameter lists.
    std::vector<std::pair<std::string, std::vector<long long>>> families;
    // Seeded pseudo-random binary words, fully reproducible.
    struct Random {
        int count = 0;
        int length = 0;
        std::uint64_t seed = 0;
    } random;

    bool empty() const {
        return exhaustive.empty() && families.empty() && random.count == 0;
    }
};

// The corpus the acceptance gate runs on: exhaustive binary up to 14 and
// ternary up to 9, wk 1..50, fibonacci and thue_morse prefixes up to 512,
// and 1000 seeded random binary words of length 200.
CorpusSpec default_corpus();

// Deterministic expansion of a spec into concrete words: exhaustive blocks by
// increasing length then lexicographic order, families in parameter order,
// random words last.
std::vector<CorpusWord> materialize_corpus(const CorpusSpec& spec);

struct CheckOutcome {
    std::string check_id;
    std::string word;            // failing word, or empty for an aggregate pass
    bool passed = true;
    std::string counterexample;  // detail for failures, empty otherwise
    long long words_checked = 0;

    friend bool operator==(const CheckOutcome&, const CheckOutcome&) = default;
};

// Run every registered invariant over every corpus word. One outcome per
// check: passes aggregate into a single line; a failure reports the shortest
// failing word met (ties broken lexicographically) with a detail string.
// Outcomes are sorted by (word, check_id); an empty corpus yields an empty
// list. Failures are data: this never throws on a falsified claim.
std::vector<CheckOutcome> run_all_checks(const CorpusSpec& corpus,
                                         const std::vector<int>& lambdas = {1, 2, 3, 4, 5, 6,
                                                                            7, 8},
                                         int factor = 3);

// Same battery over an explicit word list (e.g. the single word of an
// analysis request).
std::vector<CheckOutcome> run_all_checks(const std::vector<CorpusWord>& words,
                                         const std::vector<int>& lambdas = {1, 2, 3, 4, 5, 6,
                                                                            7, 8},
                                         int factor = 3);

inline bool all_passed(const std::vector<CheckOutcome>& outcomes) {
    for (const CheckOutcome& oc : outcomes)
        if (!oc.passed) return false;
    return true;
}

// One row of the maximum-run-count survey: the largest run count over all
// words of length n, the words attaining it (one symbol-renaming
// representative each), and whether each of those is free of secondary runs.
struct MaxrunsRow {
    int n = 0;
    int max_runs = 0;
    std::vector<std::string> argmax_words;
    std::vector<bool> secondary_free;
    long long words_enumerated = 0;
};

struct MaxrunsReport {
    int alphabet_size = 2;
    int max_len = 0;
    std::vector<MaxrunsRow> rows;
    bool all_argmax_secondary_free = false;
};

// Exhaustive survey of run counts for every length up to max_len, pruned to
// canonical symbol-renaming representatives (first occurrences in increasing
// symbol order). Run counts come from the quadratic reference finder. Purely
// descriptive: nothing here asserts.
MaxrunsReport conjecture_maxruns(int alphabet_size, int max_len);

// Classification census and bound status for one generation factor.
struct FactorReport {
    int factor = 3;
    long long words = 0;
    long long secondary_total = 0;
    bool bounds_all_satisfied = false;  // proved only for factor 3
    bool monotone_vs_previous = true;   // secondary set shrank or held per word
};

struct FactorSweepReport {
    std::vector<FactorReport> factors;
    bool monotone = false;  // every word's secondary sets nested along the sweep
};

// Re-classify the corpus per factor and evaluate the explicit bounds. The
// factor-3 column mirrors the assertive suite; larger factors are surveyed
// because the bounds were only proved at 3. Secondary-set monotonicity across
// the sweep is recorded per factor.
FactorSweepReport factor_sweep(const CorpusSpec& corpus, const std::vector<int>& factors,
                               const std::vector<int>& lambdas = {1, 2, 3, 4, 5, 6, 7, 8});

}  // namespace reps
