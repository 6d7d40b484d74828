// Cyclic roots of runs, cognate runs, and the offset between the roots of a
// non-separated cognate pair.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "reps/error.hpp"
#include "reps/runs.hpp"

namespace reps {

// One cyclic root of a run: the factor [start .. start+period-1].
struct CyclicRoot {
    int start = 0;
    int period = 0;

    Factor factor() const { return Factor{start, start + period - 1}; }

    friend bool operator==(const CyclicRoot&, const CyclicRoot&) = default;
};

// All cyclic roots of r, in order of occurrence. Every one is primitive: a
// periodic root would contradict the minimality of the run's period.
template <Symbol S>
std::vector<CyclicRoot> cyclic_roots(const BasicWord<S>& w, const Run& r) {
    if (!is_run_of(w, r)) throw std::invalid_argument("cyclic_roots: not a run of this word");
    std::vector<CyclicRoot> roots;
    for (int t = r.start; t + r.period - 1 <= r.end; ++t) roots.push_back({t, r.period});
    return roots;
}

// Cognate runs: equal minimal periods and conjugate roots. Conjugacy is
// decided by the doubling criterion (u is a rotation of v iff u occurs in vv).
template <Symbol S>
bool are_cognate(const BasicWord<S>& w, const Run& r1, const Run& r2) {
    if (r1.period != r2.period) return false;
    const int p = r1.period;
    for (int shift = 0; shift < p; ++shift) {
        bool eq = true;
        for (int x = 0; x < p && eq; ++x) {
            int y = shift + x;
            if (y >= p) y -= p;
            eq = w.at(r1.start + x) == w.at(r2.start + y);
        }
        if (eq) return true;
    }
    return false;
}

// Non-separated: the later run starts no further than one past the end of the
// earlier one (overlap or direct adjacency both qualify).
inline bool are_non_separated(const Run& r1, const Run& r2) {
    if (r1.start > r2.start)
        throw std::invalid_argument("are_non_separated: runs must be given left to right");
    return r2.start <= r1.end + 1;
}

// Offset between cognate runs: take the leftmost root of r1 and the leftmost
// root of r2 spelling the same word; sigma is their start distance mod the
// common period. The value does not depend on the choice of equal roots, so
// the leftmost pair is canonical. Requires r1.start <= r2.start; cognate
// runs always admit an equal root, so a miss means corrupted input.
template <Symbol S>
int sigma(const BasicWord<S>& w, const Run& r1, const Run& r2) {
    if (r1.period != r2.period) throw std::invalid_argument("sigma: periods differ");
    if (r1.start > r2.start) throw std::invalid_argument("sigma: runs must be given left to right");
    const int p = r1.period;
    for (int t = r2.start; t + p - 1 <= r2.end; ++t) {
        bool eq = true;
        for (int x = 0; x < p && eq; ++x) eq = w.at(r1.start + x) == w.at(t + x);
        if (eq) return (t - r1.start) % p;
    }
    throw VerificationError("sigma", "no equal cyclic root: runs are not cognate");
}

// A non-separated cognate pair, ordered left to right, with the common period
// and the root offset. Distinct runs sharing start and period cannot exist
// (both would have to be right-maximal), so left.start < right.start always.
struct RunPair {
    Run left;
    Run right;
    int period = 0;
    int sigma = 0;

    friend bool operator==(const RunPair&, const RunPair&) = default;
};

// All non-separated cognate pairs of distinct runs, ordered by (left, right).
// RunSet order (start, period, end) makes the double loop emit them sorted.
template <Symbol S>
std::vector<RunPair> cognate_pairs(const BasicWord<S>& w, const RunSet& rs) {
    std::vector<RunPair> pairs;
    const auto& runs = rs.runs;
    for (std::size_t a = 0; a < runs.size(); ++a) {
        for (std::size_t b = a + 1; b < runs.size(); ++b) {
            const Run& r1 = runs[a];
            const Run& r2 = runs[b];
            if (r1.period != r2.period) continue;
            if (r1.start == r2.start)
                throw VerificationError("cognate_pairs",
                                        "distinct runs share start and period: corrupt run set");
            if (!are_non_separated(r1, r2)) continue;
            if (!are_cognate(w, r1, r2)) continue;
            pairs.push_back(RunPair{r1, r2, r1.period, sigma(w, r1, r2)});
        }
    }
    return pairs;
}

}  // namespace reps
