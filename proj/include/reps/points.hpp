// Integer point lattice attached to a word's runs: sample points, the
// covering relation, covered regions with exact 1/p^2 weights, and the
// cover-multiplicity bound check.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "reps/generation.hpp"
#include "reps/rational.hpp"

namespace reps {

struct Point {
    int p = 1;  // always >= 1
    int j = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// a covers b iff  a.p <= b.p <= 4a.p/3  and  a.j - 2a.p/3 <= b.j <= a.j.
// Cross-multiplied so the thirds never round.
inline bool covers(const Point& a, const Point& b) {
    const long long ap = a.p, aj = a.j, bp = b.p, bj = b.j;
    return bp >= ap && 3 * bp <= 4 * ap && 3 * bj >= 3 * aj - 2 * ap && bj <= aj;
}

struct WeightedPointSet {
    std::vector<Point> points;  // sorted by (p, j), no duplicates
    Rational total_weight;      // sum of 1/p^2 over members
};

inline Rational point_weight(const Point& a) {
    return Rational(1, BigInt(a.p) * a.p);
}

// The region covered by a is the box [a.p .. 4a.p/3] x [a.j - 2a.p/3 .. a.j],
// materialized point by point. Theta(p^2) points: meant for modest p.
inline WeightedPointSet covered_region(const Point& a) {
    if (a.p < 1) throw std::invalid_argument("covered_region: point period must be >= 1");
    WeightedPointSet out;
    const int phi = 4 * a.p / 3;
    const int jlo = a.j - 2 * a.p / 3;
    for (int bp = a.p; bp <= phi; ++bp) {
        const Rational wgt(1, BigInt(bp) * bp);
        for (int bj = jlo; bj <= a.j; ++bj) {
            out.points.push_back({bp, bj});
            out.total_weight += wgt;
        }
    }
    return out;
}

// Sample points of a run: (period, start + k*period - 1) for k >= 2 while the
// position stays inside the run. Exactly floor(e(r) - 1) of them.
template <Symbol S>
WeightedPointSet points_of_run(const BasicWord<S>& w, const Run& r) {
    if (!is_run_of(w, r)) throw std::invalid_argument("points_of_run: not a run of this word");
    WeightedPointSet out;
    const Rational wgt = point_weight({r.period, 0});
    for (int pos = r.start + 2 * r.period - 1; pos <= r.end; pos += r.period) {
        out.points.push_back({r.period, pos});
        out.total_weight += wgt;
    }
    return out;
}

// Union of sample points over primary runs with period >= lambda. The unions
// are disjoint run by run; a collision falsifies that disjointness and is
// reported as a verification failure.
template <Symbol S>
WeightedPointSet prime_points(const BasicWord<S>& w, const Taxonomy& tax, int lambda) {
    if (lambda < 1) throw std::invalid_argument("prime_points: lambda must be >= 1");
    WeightedPointSet out;
    for (const Run& r : tax.primary) {
        if (r.period < lambda) continue;
        WeightedPointSet mine = points_of_run(w, r);
        out.points.insert(out.points.end(), mine.points.begin(), mine.points.end());
        out.total_weight += mine.total_weight;
    }
    std::sort(out.points.begin(), out.points.end());
    const auto dup = std::adjacent_find(out.points.begin(), out.points.end());
    if (dup != out.points.end())
        throw VerificationError("point_disjointness",
                                "sample point (" + std::to_string(dup->p) + ", " +
                                    std::to_string(dup->j) + ") belongs to two runs");
    return out;
}

// Largest number of prime points (period >= lambda) covering one common
// lattice point of the word. Only targets inside some covered region can
// score, so those regions are materialized and bucket-counted; targets are
// filtered to the lattice 1 <= p <= 2n/3, 1 <= j <= n.
template <Symbol S>
int max_cover_multiplicity(const BasicWord<S>& w, const Taxonomy& tax, int lambda) {
    const WeightedPointSet eprime = prime_points(w, tax, lambda);
    const int n = w.size();
    const int pmax = 2 * n / 3;
    std::vector<Point> hits;
    for (const Point& a : eprime.points) {
        const int php = std::min(4 * a.p / 3, pmax);
        const int pjlo = std::max(a.j - 2 * a.p / 3, 1);
        const int pjhi = std::min(a.j, n);
        for (int bp = a.p; bp <= php; ++bp)
            for (int bj = pjlo; bj <= pjhi; ++bj) hits.push_back({bp, bj});
    }
    std::sort(hits.begin(), hits.end());
    int best = 0;
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t k = i;
        while (k < hits.size() && hits[k] == hits[i]) ++k;
        best = std::max(best, int(k - i));
        i = k;
    }
    return best;
}

// Weight of any covered region V(p, j): the box has floor(2p/3)+1 columns per
// period row, so the weight is (floor(2p/3)+1) * sum_{q=p}^{floor(4p/3)} 1/q^2
// independently of j. Exact rational; affordable for moderate p.
Rational region_weight(int p);

// Exact decision of region_weight(p) > 1/6 designed for large p: 128-bit
// fixed-point lower/upper bounds decide almost always; an undecided margin
// falls back to the exact rational sum.
bool region_weight_exceeds_sixth(int p);

}  // namespace reps
