#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "reps/points.hpp"
#include "reps/word.hpp"

using namespace reps;

TEST_CASE("covering relation at and around its fractional boundaries") {
    REQUIRE(covers({3, 10}, {4, 9}));
    REQUIRE(covers({3, 10}, {3, 10}));        // self-cover
    REQUIRE_FALSE(covers({3, 10}, {5, 10}));  // 3*5 > 4*3
    REQUIRE(covers({3, 10}, {4, 8}));         // 3*8 == 3*10 - 2*3, inclusive
    REQUIRE_FALSE(covers({3, 10}, {4, 7}));
    REQUIRE_FALSE(covers({3, 10}, {4, 11}));  // j above
    REQUIRE_FALSE(covers({3, 10}, {2, 10}));  // p below
    REQUIRE(covers({1, 1}, {1, 1}));
    REQUIRE_FALSE(covers({1, 1}, {2, 1}));  // 3*2 > 4*1: V(1,.) is a single point
}

TEST_CASE("covered regions of the smallest periods") {
    WeightedPointSet v = covered_region({1, 5});
    REQUIRE(v.points == std::vector<Point>{{1, 5}});
    REQUIRE(v.total_weight == Rational(1));

    v = covered_region({2, 9});
    REQUIRE(v.points == std::vector<Point>{{2, 8}, {2, 9}});
    REQUIRE(v.total_weight == Rational(1, 2));

    v = covered_region({3, 10});
    REQUIRE(v.points ==
            std::vector<Point>{{3, 8}, {3, 9}, {3, 10}, {4, 8}, {4, 9}, {4, 10}});
    REQUIRE(v.total_weight == Rational(25, 48));

    REQUIRE_THROWS_AS(covered_region({0, 4}), std::invalid_argument);
}

TEST_CASE("region weight is translation invariant and matches the closed form") {
    for (int p = 1; p <= 40; ++p) {
        const Rational expected = region_weight(p);
        for (int j : {0, 7, 100}) {
            const WeightedPointSet v = covered_region({p, j});
            CAPTURE(p, j);
            REQUIRE(v.total_weight == expected);
            // Every region point is covered, and the box corners delimit it.
            for (const Point& b : v.points) REQUIRE(covers({p, j}, b));
            REQUIRE(int(v.points.size()) == (4 * p / 3 - p + 1) * (2 * p / 3 + 1));
        }
    }
}

TEST_CASE("weight floor: every region outweighs 1/6") {
    // Exact comparison against the rational sum while it is cheap...
    for (int p = 1; p <= 300; ++p) {
        CAPTURE(p);
        REQUIRE(region_weight(p) > Rational(1, 6));
        REQUIRE(region_weight_exceeds_sixth(p));
    }
    // ...and via the interval decision for the rest of the sweep range.
    for (int p = 301; p <= 10000; ++p) {
        if (!region_weight_exceeds_sixth(p)) {
            CAPTURE(p);
            REQUIRE(false);
        }
    }
    SUCCEED();
}

TEST_CASE("sample points of fixed runs") {
    const Word w0101 = make_word("0101");
    WeightedPointSet ps = points_of_run(w0101, make_run(w0101, 1, 4, 2));
    REQUIRE(ps.points == std::vector<Point>{{2, 4}});
    REQUIRE(ps.total_weight == Rational(1, 4));

    const Word aaaa = make_word("aaaa");
    ps = points_of_run(aaaa, make_run(aaaa, 1, 4, 1));
    REQUIRE(ps.points == std::vector<Point>{{1, 2}, {1, 3}, {1, 4}});
    REQUIRE(ps.total_weight == Rational(3));

    const Word w = make_word("01011010");
    ps = points_of_run(w, make_run(w, 2, 7, 3));
    REQUIRE(ps.points == std::vector<Point>{{3, 7}});

    REQUIRE_THROWS_AS(points_of_run(w, Run{1, 4, 3, Rational(4, 3)}), std::invalid_argument);
}

TEST_CASE("prime point unions on fixed words") {
    const Word w4 = wk_word(4);
    const Taxonomy tax = classify(w4, find_runs(w4));

    WeightedPointSet ps = prime_points(w4, tax, 1);
    REQUIRE(ps.points == std::vector<Point>{{1, 9},
                                            {2, 4},
                                            {2, 6},
                                            {2, 8},
                                            {2, 12},
                                            {2, 14},
                                            {2, 16},
                                            {3, 11},
                                            {5, 13}});
    REQUIRE(ps.total_weight ==
            Rational(1) + Rational(6, 4) + Rational(1, 9) + Rational(1, 25));

    REQUIRE(prime_points(w4, tax, 8).points.empty());
    REQUIRE(prime_points(w4, tax, 3).points == std::vector<Point>{{3, 11}, {5, 13}});

    const Word abc = make_word("abc");
    REQUIRE(prime_points(abc, classify(abc, find_runs(abc)), 1).points.empty());

    REQUIRE_THROWS_AS(prime_points(w4, tax, 0), std::invalid_argument);
}

namespace {

template <typename F>
void lattice_corpus(F&& body) {
    for (int len = 0; len <= 11; ++len) for_each_word(2, len, body);
    for (int len = 0; len <= 7; ++len) for_each_word(3, len, body);
    for (int k = 1; k <= 12; ++k) body(wk_word(k));
    for (int len : {34, 89, 144}) body(fibonacci_word(len));
    for (int len : {64, 128}) body(thue_morse_word(len));
}

}  // namespace

TEST_CASE("per-run sample points: cardinality, containment, global disjointness") {
    lattice_corpus([](const Word& w) {
        const RunSet rs = find_runs(w);
        const int n = w.size();
        std::vector<Point> all;
        for (const Run& r : rs.runs) {
            const WeightedPointSet ps = points_of_run(w, r);
            CAPTURE(to_string(w), r.start, r.end, r.period);
            REQUIRE(BigInt(ps.points.size()) == rational_floor(r.exponent - 1));
            REQUIRE(!ps.points.empty());
            for (const Point& a : ps.points) {
                REQUIRE(a.p >= 1);
                REQUIRE(a.p <= 2 * n / 3);
                REQUIRE(a.j >= 1);
                REQUIRE(a.j <= n);
            }
            all.insert(all.end(), ps.points.begin(), ps.points.end());
        }
        std::sort(all.begin(), all.end());
        // No lattice point is sampled by two different runs.
        REQUIRE(std::adjacent_find(all.begin(), all.end()) == all.end());
    });
    SUCCEED();
}

TEST_CASE("covered regions of prime points stay inside the lattice") {
    lattice_corpus([](const Word& w) {
        const Taxonomy tax = classify(w, find_runs(w));
        const int n = w.size();
        for (const Point& a : prime_points(w, tax, 1).points) {
            CAPTURE(to_string(w), a.p, a.j);
            // Box corners of the covered region.
            REQUIRE(4 * a.p / 3 <= 2 * n / 3);
            REQUIRE(a.j - 2 * a.p / 3 >= 1);
            REQUIRE(a.j <= n);
        }
    });
    SUCCEED();
}

TEST_CASE("equal-period prime points cover disjoint regions") {
    lattice_corpus([](const Word& w) {
        const Taxonomy tax = classify(w, find_runs(w));
        for (int lambda : {1, 2}) {
            const WeightedPointSet ps = prime_points(w, tax, lambda);
            for (std::size_t x = 0; x < ps.points.size(); ++x) {
                for (std::size_t y = x + 1; y < ps.points.size(); ++y) {
                    const Point& a = ps.points[x];
                    const Point& b = ps.points[y];
                    if (a.p != b.p) continue;
                    // Same period means same p-rows; regions meet iff the
                    // j-intervals [j - 2p/3, j] meet.
                    const bool meet = std::max(a.j, b.j) - 2 * a.p / 3 <= std::min(a.j, b.j);
                    CAPTURE(to_string(w), a.p, a.j, b.j);
                    REQUIRE_FALSE(meet);
                }
            }
        }
    });
    SUCCEED();
}

TEST_CASE("no lattice point is covered by three prime points") {
    lattice_corpus([](const Word& w) {
        const Taxonomy tax = classify(w, find_runs(w));
        for (int lambda : {1, 2, 3}) {
            const int m = max_cover_multiplicity(w, tax, lambda);
            CAPTURE(to_string(w), lambda, m);
            REQUIRE(m <= 2);
        }
    });
    SUCCEED();
}

TEST_CASE("cover multiplicity of fixed words") {
    const Word abc = make_word("abc");
    REQUIRE(max_cover_multiplicity(abc, classify(abc, find_runs(abc)), 1) == 0);

    const Word aaaa = make_word("aaaa");
    const int m = max_cover_multiplicity(aaaa, classify(aaaa, find_runs(aaaa)), 1);
    REQUIRE(m == 1);  // each (1, j) covers itself only

    const Word w4 = wk_word(4);
    const int m4 = max_cover_multiplicity(w4, classify(w4, find_runs(w4)), 1);
    REQUIRE(m4 >= 1);
    REQUIRE(m4 <= 2);
}
