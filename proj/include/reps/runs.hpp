// Maximal repetitions (runs). Two independent routes: a per-period reference
// scan straight from the definition, and a production finder built on Lyndon
// roots over the two alphabet orders with O(1) extension queries.
#pragma once

#include "reps/lce.hpp"
#include "reps/periodicity.hpp"
#include "reps/word.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace reps {

struct Run {
    int start = 0;
    int end = 0;
    int period = 0;
    Rational exponent;  // length / period, always >= 2

    int length() const { return end - start + 1; }
    Factor factor() const { return Factor{start, end}; }

    friend bool operator==(const Run& a, const Run& b) {
        return a.start == b.start && a.end == b.end && a.period == b.period;
    }
    friend bool operator<(const Run& a, const Run& b) {
        return std::tie(a.start, a.period, a.end) < std::tie(b.start, b.period, b.end);
    }
};

struct RunSet {
    std::vector<Run> runs;  // sorted by (start, period, end)
    int word_len = 0;
};

template <Symbol S>
Run make_run(const BasicWord<S>&, int start, int end, int period) {
    return Run{start, end, period, Rational(end - start + 1, period)};
}

// f is a maximal repetition iff, with p its minimal period, exponent >= 2 and
// neither end extends: start-1 (if any) breaks p, end+1 (if any) breaks p.
template <Symbol S>
bool is_maximal_repetition(const BasicWord<S>& w, Factor f) {
    require_factor(w, f);
    const int p = minimal_period(w, f);
    if (f.length() < 2 * p) return false;
    if (f.start > 1 && w.at(f.start - 1) == w.at(f.start - 1 + p)) return false;
    if (f.end < w.size() && w.at(f.end + 1 - p) == w.at(f.end + 1)) return false;
    return true;
}

// Run validity check used by operations whose contract demands r in R(w).
template <Symbol S>
bool is_run_of(const BasicWord<S>& w, const Run& r) {
    if (r.start < 1 || r.start > r.end || r.end > w.size() || r.period < 1) return false;
    Factor f = r.factor();
    return minimal_period(w, f) == r.period && is_maximal_repetition(w, f);
}

// Reference finder: for each period p, maximal intervals of w[x] == w[x+p]
// matches give the maximal intervals with period p; keep those of exponent
// >= 2 whose minimal period is exactly p. Deterministic O(n^2).
template <Symbol S>
RunSet find_runs_oracle(const BasicWord<S>& w) {
    const int n = w.size();
    std::vector<Run> runs;
    for (int p = 1; 2 * p <= n; ++p) {
        int x = 1;
        while (x <= n - p) {
            if (!(w.at(x) == w.at(x + p))) {
                ++x;
                continue;
            }
            int b = x;
            while (b + 1 <= n - p && w.at(b + 1) == w.at(b + 1 + p)) ++b;
            if (b - x + 1 >= p && minimal_period(w, Factor{x, b + p}) == p)
                runs.push_back(make_run(w, x, b + p, p));
            x = b + 1;
        }
    }
    std::sort(runs.begin(), runs.end());
    return RunSet{std::move(runs), n};
}

namespace detail {

// Longest Lyndon prefix of each suffix, from suffix ranks: it ends right
// before the next lexicographically smaller suffix.
inline std::vector<int> lyndon_from_ranks(const std::vector<int>& rank) {
    const int n = static_cast<int>(rank.size());
    std::vector<int> lyn(static_cast<std::size_t>(n));
    std::vector<int> stack;
    for (int i = n - 1; i >= 0; --i) {
        while (!stack.empty() && rank[static_cast<std::size_t>(stack.back())] >
                                     rank[static_cast<std::size_t>(i)])
            stack.pop_back();
        lyn[static_cast<std::size_t>(i)] = (stack.empty() ? n : stack.back()) - i;
        stack.push_back(i);
    }
    return lyn;
}

}  // namespace detail

// Production finder: every run contains a Lyndon root under at least one of
// the two alphabet orders, so extending each longest-Lyndon-prefix candidate
// by its left/right periodic extensions enumerates all runs. O(n log n).
template <Symbol S>
RunSet find_runs(const BasicWord<S>& w) {
    const int n = w.size();
    if (n < 2) return RunSet{{}, n};

    std::vector<int> codes = symbol_codes(w);
    const int sigma = 1 + *std::max_element(codes.begin(), codes.end());
    std::vector<int> neg(codes), rev(codes);
    for (int& c : neg) c = sigma - 1 - c;
    std::reverse(rev.begin(), rev.end());

    const LceIndex fwd(codes), bwd(rev), negated(neg);
    auto lcs = [&](int x, int y) {  // common suffix of prefixes ending at x, y
        if (x < 0 || y < 0) return 0;
        return bwd.lce(n - 1 - x, n - 1 - y);
    };

    std::vector<std::array<int, 3>> cand;  // {start, end, period}, 0-based ends
    for (int order = 0; order < 2; ++order) {
        std::vector<int> rank(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            rank[static_cast<std::size_t>(i)] =
                (order == 0 ? fwd : negated).suffix_rank(i);
        const std::vector<int> lyn = detail::lyndon_from_ranks(rank);
        for (int i = 0; i < n; ++i) {
            const int p = lyn[static_cast<std::size_t>(i)];
            const int f = fwd.lce(i, i + p);
            const int b = lcs(i - 1, i + p - 1);
            if (b + f >= p) cand.push_back({i - b, i + p + f - 1, p});
        }
    }

    std::sort(cand.begin(), cand.end());
    std::vector<Run> runs;
    for (std::size_t k = 0; k < cand.size(); ++k) {
        if (k > 0 && cand[k][0] == cand[k - 1][0] && cand[k][1] == cand[k - 1][1])
            continue;  // same interval rediscovered with a non-minimal period
        runs.push_back(make_run(w, cand[k][0] + 1, cand[k][1] + 1, cand[k][2]));
    }
    std::sort(runs.begin(), runs.end());
    return RunSet{std::move(runs), n};
}

}  // namespace reps
