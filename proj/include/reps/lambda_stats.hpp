// Period-filtered run statistics (counts, exponent sums, letter-cover
// profile) and the explicit-constant bound checks derived from them.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "reps/points.hpp"

namespace reps {

struct LambdaStats {
    int lambda = 1;
    int n = 0;
    int rp_count = 0;              // primary runs with period >= lambda
    int rs_count = 0;              // secondary runs whose pair period >= lambda
    Rational exp_sum;              // exponent sum over the filtered primary runs
    Rational exs_sum;              // exponent sum over the filtered secondary runs
    long long eprime_count = 0;    // prime sample points with period >= lambda
    std::vector<int> clp_profile;  // [i-1]: filtered primary runs covering position i
    int clp_max = 0;

    friend bool operator==(const LambdaStats&, const LambdaStats&) = default;
};

// Both members of a generating pair share one period, so "generated by
// filtered runs" reduces to pair.period >= lambda.
template <Symbol S>
LambdaStats lambda_stats(const BasicWord<S>& w, const Taxonomy& tax, int lambda) {
    if (lambda < 1) throw std::invalid_argument("lambda_stats: lambda must be >= 1");
    LambdaStats st;
    st.lambda = lambda;
    st.n = w.size();
    std::vector<int> diff(std::size_t(st.n) + 2, 0);
    for (const Run& r : tax.primary) {
        if (r.period < lambda) continue;
        ++st.rp_count;
        st.exp_sum += r.exponent;
        ++diff[std::size_t(r.start)];
        --diff[std::size_t(r.end) + 1];
    }
    for (const GenerationRecord& g : tax.secondary) {
        if (g.pair.period < lambda) continue;
        ++st.rs_count;
        st.exs_sum += g.child.exponent;
    }
    st.eprime_count = static_cast<long long>(prime_points(w, tax, lambda).points.size());
    st.clp_profile.assign(std::size_t(st.n), 0);
    int acc = 0;
    for (int i = 1; i <= st.n; ++i) {
        acc += diff[std::size_t(i)];
        st.clp_profile[std::size_t(i) - 1] = acc;
        st.clp_max = std::max(st.clp_max, acc);
    }
    return st;
}

// One measured-versus-bound line. A vacuous entry is one whose measured side
// is empty (all-zero), where the strict inequality degenerates to 0 < 0; it
// counts as satisfied and is flagged so reports can say why.
struct BoundEntry {
    std::string name;
    std::string measured;
    std::string bound;
    bool satisfied = false;
    bool vacuous = false;

    friend bool operator==(const BoundEntry&, const BoundEntry&) = default;
};

struct BoundsReport {
    int lambda = 1;
    int n = 0;
    std::vector<BoundEntry> entries;
    bool all_satisfied = false;

    friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

namespace detail {

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace detail

// The five explicit bounds tied to a single lambda:
//   rp_le_eprime           rp_count <= eprime_count
//   eprime_bound           eprime_count < 24n/(2*lambda - 1)
//   exponent_sum_bound     exp_sum + exs_sum < 6 * eprime_count
//   secondary_sum_bound    exs_sum < 3 * rs_count
//   letter_cover_bound     clp_max < 44 * ln(n / (lambda - 1/2))
// All comparisons exact except the logarithm, which only meets integers.
inline BoundsReport theorem_bounds_report(const LambdaStats& st) {
    BoundsReport rep;
    rep.lambda = st.lambda;
    rep.n = st.n;

    {
        BoundEntry e;
        e.name = "rp_le_eprime";
        e.measured = std::to_string(st.rp_count);
        e.bound = std::to_string(st.eprime_count);
        e.satisfied = st.rp_count <= st.eprime_count;
        rep.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "eprime_bound";
        const Rational bound(24LL * st.n, 2LL * st.lambda - 1);
        e.measured = std::to_string(st.eprime_count);
        e.bound = rational_str(bound);
        e.vacuous = st.n == 0;
        e.satisfied = e.vacuous || Rational(st.eprime_count) < bound;
        rep.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "exponent_sum_bound";
        const Rational measured = st.exp_sum + st.exs_sum;
        const Rational bound = Rational(6) * st.eprime_count;
        e.measured = rational_str(measured);
        e.bound = rational_str(bound);
        e.vacuous = st.eprime_count == 0;
        e.satisfied = e.vacuous || measured < bound;
        rep.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "secondary_sum_bound";
        const Rational bound = Rational(3) * st.rs_count;
        e.measured = rational_str(st.exs_sum);
        e.bound = rational_str(bound);
        e.vacuous = st.rs_count == 0;
        e.satisfied = e.vacuous || st.exs_sum < bound;
        rep.entries.push_back(e);
    }
    {
        BoundEntry e;
        e.name = "letter_cover_bound";
        const double bound =
            st.n == 0 ? 0.0 : 44.0 * std::log(double(st.n) / (double(st.lambda) - 0.5));
        e.measured = std::to_string(st.clp_max);
        e.bound = detail::format_double(bound);
        e.vacuous = st.clp_max == 0;
        e.satisfied = e.vacuous || double(st.clp_max) < bound;
        rep.entries.push_back(e);
    }

    rep.all_satisfied = std::all_of(rep.entries.begin(), rep.entries.end(),
                                    [](const BoundEntry& e) { return e.satisfied; });
    return rep;
}

}  // namespace reps
