// Generation of runs by non-separated cognate pairs, and the induced
// taxonomy: a run is secondary when some pair generates it, primary otherwise.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "reps/structure.hpp"

namespace reps {

// A secondary run together with the pair that generates it and the multiple
// alpha tying its period to the pair: child.period == alpha * pair.period +
// pair.sigma.
struct GenerationRecord {
    Run child;
    RunPair pair;
    int alpha = 0;

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

// The pair (r', r'') generates r when r's period is at least factor times the
// pair's, r starts strictly inside r' and ends strictly inside r'':
//   r'.start < r.start <= r'.end  and  r''.start <= r.end < r''.end.
// The factor must stay >= 3; below that the generating pair is no longer
// unique and the taxonomy collapses.
inline bool generates(const RunPair& pair, const Run& r, int factor = 3) {
    if (factor < 3) throw std::invalid_argument("generates: factor must be >= 3");
    return static_cast<long long>(r.period) >=
               static_cast<long long>(factor) * pair.period &&
           pair.left.start < r.start && r.start <= pair.left.end &&
           pair.right.start <= r.end && r.end < pair.right.end;
}

namespace detail {

inline std::string run_str(const Run& r) {
    return "[" + std::to_string(r.start) + ".." + std::to_string(r.end) +
           "] p=" + std::to_string(r.period);
}

inline std::string pair_str(const RunPair& pr) {
    return run_str(pr.left) + " + " + run_str(pr.right) + " sigma=" + std::to_string(pr.sigma);
}

}  // namespace detail

// Every run generated by the pair, built arithmetically: for each alpha from
// factor up while alpha*p + sigma < min(start gap, end gap), the generated run
// is exactly w[r''.start - P .. r'.end + P] with period P = alpha*p + sigma.
// Each candidate the arithmetic admits must be a genuine run generated by the
// pair; anything else falsifies checked material and raises VerificationError.
template <Symbol S>
std::vector<GenerationRecord> enumerate_generated(const BasicWord<S>& w, const RunPair& pair,
                                                  int factor = 3) {
    if (factor < 3) throw std::invalid_argument("enumerate_generated: factor must be >= 3");
    std::vector<GenerationRecord> out;
    const int p = pair.period;
    const int bound =
        std::min(pair.right.start - pair.left.start, pair.right.end - pair.left.end);
    for (int alpha = factor;
         static_cast<long long>(alpha) * p + pair.sigma < bound; ++alpha) {
        const int period = alpha * p + pair.sigma;
        const int start = pair.right.start - period;
        const int end = pair.left.end + period;
        const std::string who = "alpha=" + std::to_string(alpha) + " under pair " +
                                detail::pair_str(pair);
        if (start < 1 || end > w.size())
            throw VerificationError("generated_run_shape", who + ": interval out of bounds");
        const Run child = make_run(w, start, end, period);
        if (!is_run_of(w, child))
            throw VerificationError("generated_run_shape", who + ": interval is not a run");
        if (!generates(pair, child, factor))
            throw VerificationError("generated_run_shape",
                                    who + ": run is not generated by its own pair");
        out.push_back(GenerationRecord{child, pair, alpha});
    }
    return out;
}

// Classification of a word's full run set.
struct Taxonomy {
    std::vector<Run> primary;                 // sorted as in the run set
    std::vector<GenerationRecord> secondary;  // sorted by child
    int factor = 3;
    int word_len = 0;

    bool is_primary(const Run& r) const {
        return std::binary_search(primary.begin(), primary.end(), r);
    }
};

// Classify every run of rs by exhaustively testing all non-separated cognate
// pairs against it. Exactly one pair may generate a run; two or more falsify
// generator uniqueness. The result is cross-checked against the arithmetic
// enumeration over all pairs, which must reproduce the same secondary records.
template <Symbol S>
Taxonomy classify(const BasicWord<S>& w, const RunSet& rs, int factor = 3) {
    if (factor < 3) throw std::invalid_argument("classify: factor must be >= 3");
    const std::vector<RunPair> pairs = cognate_pairs(w, rs);

    Taxonomy tax;
    tax.factor = factor;
    tax.word_len = rs.word_len;
    for (const Run& r : rs.runs) {
        const RunPair* found = nullptr;
        for (const RunPair& pr : pairs) {
            if (!generates(pr, r, factor)) continue;
            if (found != nullptr)
                throw VerificationError("generator_uniqueness",
                                        detail::run_str(r) + " is generated by both " +
                                            detail::pair_str(*found) + " and " +
                                            detail::pair_str(pr));
            found = &pr;
        }
        if (found == nullptr) {
            tax.primary.push_back(r);
            continue;
        }
        const int delta = r.period - found->sigma;
        if (delta <= 0 || delta % found->period != 0)
            throw VerificationError("generated_run_shape",
                                    detail::run_str(r) + ": period is not alpha*p + sigma of " +
                                        detail::pair_str(*found));
        tax.secondary.push_back(GenerationRecord{r, *found, delta / found->period});
    }

    std::vector<GenerationRecord> enumerated;
    for (const RunPair& pr : pairs)
        for (GenerationRecord& g : enumerate_generated(w, pr, factor))
            enumerated.push_back(std::move(g));
    std::sort(enumerated.begin(), enumerated.end(),
              [](const GenerationRecord& a, const GenerationRecord& b) { return a.child < b.child; });
    if (enumerated != tax.secondary)
        throw VerificationError("generated_run_shape",
                                "arithmetic enumeration disagrees with the exhaustive pair test");
    return tax;
}

// Children of r taken as the left member of its generating pairs.
inline std::vector<Run> generated_from_left(const Taxonomy& tax, const Run& r) {
    std::vector<Run> out;
    for (const GenerationRecord& g : tax.secondary)
        if (g.pair.left == r) out.push_back(g.child);
    return out;
}

}  // namespace reps
