#include "reps/runs.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace reps;

namespace {

Run R(int s, int e, int p) { return Run{s, e, p, Rational(e - s + 1, p)}; }

Word random_binary(int len, std::mt19937_64& rng) {
    std::vector<char> syms(static_cast<std::size_t>(len));
    for (char& c : syms) c = (rng() & 1) ? '1' : '0';
    return Word(std::move(syms));
}

}  // namespace

TEST_CASE("runs of 01011010 (frozen)", "[runs]") {
    const Word w = make_word("01011010");
    for (const RunSet& rs : {find_runs_oracle(w), find_runs(w)}) {
        REQUIRE(rs.word_len == 8);
        REQUIRE(rs.runs ==
                std::vector<Run>{R(1, 4, 2), R(2, 7, 3), R(4, 5, 1), R(5, 8, 2)});
    }
    CHECK(find_runs_oracle(w).runs[0].exponent == Rational(2));
    CHECK(find_runs_oracle(w).runs[1].length() == 6);
}

TEST_CASE("runs of small words (frozen)", "[runs]") {
    CHECK(find_runs_oracle(make_word("aaaa")).runs == std::vector<Run>{R(1, 4, 1)});
    CHECK(find_runs(make_word("aaaa")).runs == std::vector<Run>{R(1, 4, 1)});
    CHECK(find_runs_oracle(make_word("abc")).runs.empty());
    CHECK(find_runs(make_word("abc")).runs.empty());
    CHECK(find_runs_oracle(make_word("")).runs.empty());
    CHECK(find_runs(make_word("")).runs.empty());
    CHECK(find_runs_oracle(make_word("a")).runs.empty());
    CHECK(find_runs(make_word("a")).runs.empty());
    CHECK(find_runs_oracle(make_word("aabaab")).runs ==
          std::vector<Run>{R(1, 2, 1), R(1, 6, 3), R(4, 5, 1)});
}

TEST_CASE("runs of wk(4) (frozen)", "[runs]") {
    const Word w = wk_word(4);
    const std::vector<Run> expected{R(1, 8, 2),  R(2, 15, 7), R(4, 13, 5),
                                    R(6, 11, 3), R(8, 9, 1),  R(9, 16, 2)};
    CHECK(find_runs_oracle(w).runs == expected);
    CHECK(find_runs(w).runs == expected);
}

TEST_CASE("the two finders and the definition agree exhaustively", "[runs]") {
    std::string bad;
    auto sweep = [&](int alphabet, int max_len, bool with_definition) {
        for (int len = 0; len <= max_len && bad.empty(); ++len)
            for_each_word(alphabet, len, [&](const Word& w) {
                if (!bad.empty()) return;
                const RunSet oracle = find_runs_oracle(w);
                if (find_runs(w).runs != oracle.runs) {
                    bad = "finders disagree on " + to_string(w);
                    return;
                }
                if (with_definition && oracle.runs != oracles::runs_by_definition(w))
                    bad = "oracle disagrees with definition on " + to_string(w);
            });
    };
    sweep(2, 12, true);
    sweep(3, 7, true);
    sweep(4, 5, true);
    REQUIRE(bad.empty());
}

TEST_CASE("the two finders agree on families and random words", "[runs]") {
    for (int k = 1; k <= 16; ++k) {
        const Word w = wk_word(k);
        REQUIRE(find_runs(w).runs == find_runs_oracle(w).runs);
    }
    for (int len : {2, 3, 33, 89, 128, 256}) {
        REQUIRE(find_runs(fibonacci_word(len)).runs ==
                find_runs_oracle(fibonacci_word(len)).runs);
        REQUIRE(find_runs(thue_morse_word(len)).runs ==
                find_runs_oracle(thue_morse_word(len)).runs);
    }
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const Word w = random_binary(100, rng);
        REQUIRE(find_runs(w).runs == find_runs_oracle(w).runs);
    }
}

TEST_CASE("run invariants", "[runs]") {
    for (int len = 0; len <= 11; ++len)
        for_each_word(2, len, [&](const Word& w) {
            const RunSet rs = find_runs_oracle(w);
            for (const Run& r : rs.runs) {
                REQUIRE(r.exponent >= Rational(2));
                REQUIRE(r.exponent == Rational(r.length(), r.period));
                REQUIRE(minimal_period(w, r.factor()) == r.period);
                REQUIRE(is_maximal_repetition(w, r.factor()));
                REQUIRE(is_run_of(w, r));
            }
            // intervals are pairwise distinct and sorted by (start, period, end)
            REQUIRE(std::is_sorted(rs.runs.begin(), rs.runs.end()));
            for (std::size_t a = 1; a < rs.runs.size(); ++a)
                REQUIRE(!(rs.runs[a - 1].start == rs.runs[a].start &&
                          rs.runs[a - 1].end == rs.runs[a].end));
        });
}

TEST_CASE("is_maximal_repetition on factors", "[runs]") {
    const Word w = make_word("01011010");
    CHECK(is_maximal_repetition(w, Factor{2, 7}));
    CHECK(is_maximal_repetition(w, Factor{1, 4}));
    CHECK_FALSE(is_maximal_repetition(w, Factor{1, 2}));  // exponent 1
    CHECK_FALSE(is_maximal_repetition(w, Factor{2, 5}));
    CHECK_FALSE(is_maximal_repetition(make_word("aaaa"), Factor{1, 3}));  // extends
    CHECK(is_maximal_repetition(make_word("aaaa"), Factor{1, 4}));
    CHECK_FALSE(is_run_of(w, Run{1, 4, 1, Rational(4)}));  // wrong period
    CHECK_FALSE(is_run_of(w, Run{0, 4, 2, Rational(2)}));  // out of bounds
}

TEST_CASE("every primitive square lies in exactly one run of its period", "[runs]") {
    std::string bad;
    auto covered = [&](const Word& w) {
        const RunSet rs = find_runs_oracle(w);
        for (const auto& sq : enumerate_primitive_squares(w)) {
            int count = 0;
            for (const Run& r : rs.runs)
                if (r.period == sq.period && r.start <= sq.start &&
                    sq.start + 2 * sq.period - 1 <= r.end)
                    ++count;
            if (count != 1) {
                bad = to_string(w) + " square (" + std::to_string(sq.start) + "," +
                      std::to_string(sq.period) + ") in " + std::to_string(count) +
                      " runs";
                return;
            }
        }
    };
    for (int len = 1; len <= 11 && bad.empty(); ++len)
        for_each_word(2, len, [&](const Word& w) {
            if (bad.empty()) covered(w);
        });
    covered(fibonacci_word(89));
    covered(thue_morse_word(64));
    REQUIRE(bad.empty());
}

TEST_CASE("runs over generic symbols", "[runs]") {
    struct Tok {
        int v = 0;
        bool operator==(const Tok&) const = default;
    };
    BasicWord<Tok> w(std::vector<Tok>{{3}, {9}, {3}, {9}, {3}});
    const RunSet rs = find_runs(w);
    REQUIRE(rs.runs.size() == 1);
    CHECK(rs.runs[0] == Run{1, 5, 2, Rational(5, 2)});
    CHECK(find_runs_oracle(w).runs == rs.runs);
}
