#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "reps/generation.hpp"
#include "reps/lce.hpp"
#include "reps/periodicity.hpp"
#include "reps/points.hpp"
#include "reps/runs.hpp"
#include "reps/structure.hpp"
#include "reps/verify.hpp"

namespace reps {
namespace {

struct CheckFailure {
    std::string detail;
};

[[noreturn]] void fail(std::string detail) { throw CheckFailure{std::move(detail)}; }

std::string show(const Run& r) { return detail::run_str(r); }
std::string show(const RunPair& pr) { return detail::pair_str(pr); }

// Everything the battery may want about one word, built once and shared.
// The heavier members are created on first use.
struct WordContext {
    const CorpusWord& cw;
    const Word& w;
    int n;
    int factor;
    const std::vector<int>& lambdas;

    RunSet runs;
    std::vector<RunPair> pairs;
    Taxonomy tax;

    WordContext(const CorpusWord& cw_, int factor_, const std::vector<int>& lambdas_)
        : cw(cw_),
          w(cw_.word),
          n(cw_.word.size()),
          factor(factor_),
          lambdas(lambdas_),
          runs(find_runs(cw_.word)),
          pairs(cognate_pairs(cw_.word, runs)),
          tax(classify(cw_.word, runs, factor_)) {}

    LceIndex& lce() {
        if (!lce_) {
            codes_ = symbol_codes(w);
            lce_.emplace(std::span<const int>(codes_));
        }
        return *lce_;
    }

    PeriodTable& ptable() {
        if (!ptable_) ptable_.emplace(w);
        return *ptable_;
    }

    // Primitive squares read off the run set: within a run of period p every
    // window of length 2p is a primitive square, and every primitive square
    // lies in the run sharing its period. The square_containment check
    // verifies this reading against the definitional enumeration on words
    // short enough to afford it.
    const std::vector<PrimitiveSquare>& squares() {
        if (!squares_) {
            std::vector<PrimitiveSquare> sq;
            for (const Run& r : runs.runs)
                for (int l = r.start; l + 2 * r.period - 1 <= r.end; ++l)
                    sq.push_back({l, r.period});
            std::sort(sq.begin(), sq.end());
            squares_ = std::move(sq);
        }
        return *squares_;
    }

    const std::vector<LambdaStats>& stats() {
        if (!stats_) {
            std::vector<LambdaStats> st;
            for (int lambda : lambdas) st.push_back(lambda_stats(w, tax, lambda));
            stats_ = std::move(st);
        }
        return *stats_;
    }

    bool root_equal(int a, int b, int p) { return lce().lce(a - 1, b - 1) >= p; }

  private:
    std::optional<LceIndex> lce_;
    std::vector<int> codes_;
    std::optional<PeriodTable> ptable_;
    std::optional<std::vector<PrimitiveSquare>> squares_;
    std::optional<std::vector<LambdaStats>> stats_;
};

// ---------------------------------------------------------------------------
// The battery. Each check inspects one word and throws CheckFailure with a
// short detail on the first violation it meets.
// ---------------------------------------------------------------------------

void check_runs_oracle_equivalence(WordContext& ctx) {
    const RunSet reference = find_runs_oracle(ctx.w);
    if (reference.runs == ctx.runs.runs) return;
    for (const Run& r : reference.runs)
        if (!std::binary_search(ctx.runs.runs.begin(), ctx.runs.runs.end(), r))
            fail("finder misses " + show(r));
    for (const Run& r : ctx.runs.runs)
        if (!std::binary_search(reference.runs.begin(), reference.runs.end(), r))
            fail("finder invents " + show(r));
    fail("run sets differ");
}

bool check_minper_oracle_gate(WordContext& ctx) { return ctx.n <= 16; }
void check_minper_oracle(WordContext& ctx) {
    for (int i = 1; i <= ctx.n; ++i) {
        for (int j = i; j <= ctx.n; ++j) {
            const Factor f{i, j};
            int scan = f.length();
            for (int p = 1; p < f.length(); ++p) {
                if (has_period(ctx.w, f, p)) {
                    scan = p;
                    break;
                }
            }
            if (minimal_period(ctx.w, f) != scan)
                fail("minimal period of [" + std::to_string(i) + ".." + std::to_string(j) +
                     "] disagrees with the definitional scan");
        }
    }
}

// Periods p, q of the whole word with p + q <= n imply the period gcd(p, q).
void check_lemma_1(WordContext& ctx) {
    const int n = ctx.n;
    if (n == 0) return;
    // All proper periods, from the border cascade.
    std::vector<int> border(std::size_t(n) + 1, 0);
    border[0] = -1;
    for (int i = 1; i <= n; ++i) {
        int b = border[std::size_t(i) - 1];
        while (b >= 0 && ctx.w.at(b + 1) != ctx.w.at(i)) b = border[std::size_t(b)];
        border[std::size_t(i)] = b + 1;
    }
    std::vector<int> periods;
    std::vector<bool> is_period(std::size_t(n) + 1, false);
    for (int b = border[std::size_t(n)]; b >= 0; b = border[std::size_t(b)]) {
        periods.push_back(n - b);
        is_period[std::size_t(n - b)] = true;
    }
    for (std::size_t x = 0; x < periods.size(); ++x) {
        for (std::size_t y = x; y < periods.size(); ++y) {
            const int p = periods[x], q = periods[y];
            const auto g = implied_gcd_period(n, p, q);
            if (!g) continue;
            if (!is_period[std::size_t(*g)])
                fail("periods " + std::to_string(p) + ", " + std::to_string(q) +
                     " do not force period " + std::to_string(*g));
        }
    }
}

// A factor of length >= 2q with period q has its minimal period dividing q.
// Quantified via extensions: the factors with period q starting at i are
// exactly the prefixes of length <= q + lce(i, i+q) there.
void check_prop_2(WordContext& ctx) {
    const int n = ctx.n;
    LceIndex& lce = ctx.lce();
    PeriodTable& table = ctx.ptable();
    for (int i = 1; i <= n; ++i) {
        for (int q = 1; 2 * q <= n - i + 1; ++q) {
            const int ext = q + lce.lce(i - 1, i - 1 + q);
            for (int len = 2 * q; len <= ext && i + len - 1 <= n; ++len) {
                const int minper = table.min_period(i, i + len - 1);
                if (q % minper != 0)
                    fail("factor [" + std::to_string(i) + ".." + std::to_string(i + len - 1) +
                         "] has period " + std::to_string(q) +
                         " not divisible by its minimal period " + std::to_string(minper));
            }
        }
    }
}

// Two factors with period q overlapping by >= q letters have a q-periodic
// union. Quantification collapses to the inclusion-maximal q-periodic
// factors: a violating pair exists iff two of those overlap by >= q.
void check_prop_3(WordContext& ctx) {
    const int n = ctx.n;
    for (int q = 1; q < n; ++q) {
        std::vector<std::pair<int, int>> factors;  // maximal q-periodic [s..e]
        int s = 0;
        for (int x = 1; x <= n - q + 1; ++x) {
            const bool match = x <= n - q && ctx.w.at(x) == ctx.w.at(x + q);
            if (match && s == 0) s = x;
            if (!match && s != 0) {
                factors.emplace_back(s, x - 1 + q);
                s = 0;
            }
        }
        for (std::size_t a = 0; a < factors.size(); ++a) {
            for (std::size_t b = a + 1; b < factors.size(); ++b) {
                const int overlap = factors[a].second - factors[b].first + 1;
                if (overlap >= q)
                    fail("maximal period-" + std::to_string(q) + " factors [" +
                         std::to_string(factors[a].first) + ".." +
                         std::to_string(factors[a].second) + "] and [" +
                         std::to_string(factors[b].first) + ".." +
                         std::to_string(factors[b].second) + "] overlap by " +
                         std::to_string(overlap));
            }
        }
    }
}

std::vector<std::vector<const Run*>> period_groups(const RunSet& rs) {
    std::map<int, std::vector<const Run*>> by_period;
    for (const Run& r : rs.runs) by_period[r.period].push_back(&r);
    std::vector<std::vector<const Run*>> out;
    for (auto& [p, group] : by_period)
        if (group.size() > 1) out.push_back(std::move(group));
    return out;
}

void check_prop_4(WordContext& ctx) {
    for (const auto& group : period_groups(ctx.runs)) {
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                const Run& r1 = *group[a];
                const Run& r2 = *group[b];
                if (!are_non_separated(r1, r2)) continue;
                if (r1.end - r2.start + 1 >= r1.period)
                    fail(show(r1) + " and " + show(r2) + " overlap by >= their period");
            }
        }
    }
}

// First and third of any start-ordered equal-period triple are separated.
// Later thirds only move right, so consecutive triples decide the claim.
void check_prop_5(WordContext& ctx) {
    for (const auto& group : period_groups(ctx.runs)) {
        for (std::size_t a = 0; a + 2 < group.size(); ++a) {
            if (are_non_separated(*group[a], *group[a + 2]))
                fail(show(*group[a]) + " and " + show(*group[a + 2]) +
                     " are non-separated around " + show(*group[a + 1]));
        }
    }
}

// The root offset is independent of which equal roots witness it.
void check_lemma_6(WordContext& ctx) {
    for (const RunPair& pr : ctx.pairs) {
        const int p = pr.period;
        for (int a = pr.left.start; a + p - 1 <= pr.left.end; ++a) {
            for (int b = pr.right.start; b + p - 1 <= pr.right.end; ++b) {
                if (!ctx.root_equal(a, b, p)) continue;
                const int residue = ((b - a) % p + p) % p;
                if (residue != pr.sigma)
                    fail("equal roots at " + std::to_string(a) + " and " + std::to_string(b) +
                         " of " + show(pr) + " give residue " + std::to_string(residue));
            }
        }
    }
}

void check_prop_7(WordContext& ctx) {
    for (const RunPair& pr : ctx.pairs)
        if (pr.sigma <= 0 || pr.sigma >= pr.period)
            fail(show(pr) + " has offset outside (0, period)");
}

void check_pair_chain(WordContext& ctx) {
    for (const RunPair& pr : ctx.pairs) {
        const int ip = pr.left.start, jp = pr.left.end;
        const int ipp = pr.right.start, jpp = pr.right.end;
        const int p = pr.period;
        if (!(ip < jp + 1 - p && jp + 1 - p < ipp && ipp <= jp + 1 && jp + 1 < jpp))
            fail(show(pr) + " violates the start/end chain");
    }
}

// A primitive square at least twice as wide as a pair's period and inside the
// pair's span has its midpoint in the seam [right.start, left.end + 1].
void check_lemma_8(WordContext& ctx) {
    const auto& squares = ctx.squares();
    for (const RunPair& pr : ctx.pairs) {
        for (const PrimitiveSquare& sq : squares) {
            if (sq.period < 2 * pr.period) continue;
            if (sq.start < pr.left.start || sq.start + 2 * sq.period - 1 > pr.right.end)
                continue;
            const int mid = sq.start + sq.period;
            if (mid < pr.right.start || mid > pr.left.end + 1)
                fail("square at " + std::to_string(sq.start) + " period " +
                     std::to_string(sq.period) + " misses the seam of " + show(pr));
        }
    }
}

void check_lemma_9(WordContext& ctx) {
    for (const Run& r : ctx.runs.runs) {
        int generators = 0;
        for (const RunPair& pr : ctx.pairs)
            if (generates(pr, r, ctx.factor)) ++generators;
        if (generators > 1)
            fail(show(r) + " has " + std::to_string(generators) + " generating pairs");
    }
}

void check_lemma_10(WordContext& ctx) {
    for (const RunPair& pr : ctx.pairs) {
        std::vector<Run> by_test;
        for (const Run& r : ctx.runs.runs)
            if (generates(pr, r, ctx.factor)) by_test.push_back(r);
        std::vector<Run> by_enum;
        for (const GenerationRecord& g : enumerate_generated(ctx.w, pr, ctx.factor))
            by_enum.push_back(g.child);
        std::sort(by_enum.begin(), by_enum.end());
        if (by_enum != by_test)
            fail("arithmetic enumeration under " + show(pr) +
                 " differs from the exhaustive test (" + std::to_string(by_enum.size()) +
                 " vs " + std::to_string(by_test.size()) + " runs)");
    }
}

void check_cor_11(WordContext& ctx) {
    const Rational seven_thirds(7, 3);
    for (const GenerationRecord& g : ctx.tax.secondary) {
        if (!ctx.tax.is_primary(g.pair.left) || !ctx.tax.is_primary(g.pair.right))
            fail("pair of " + show(g.child) + " has a non-primary member");
        if (!(g.child.exponent < seven_thirds))
            fail(show(g.child) + " is secondary with exponent >= 7/3");
        if (!(g.pair.left.exponent > seven_thirds) || !(g.pair.right.exponent > seven_thirds))
            fail("a generator of " + show(g.child) + " has exponent <= 7/3");
    }
}

void check_cor_12(WordContext& ctx) {
    for (const Run& r : ctx.runs.runs) {
        const BigInt band = rational_ceil(r.exponent) - 3;
        const BigInt allowed = band < 0 ? BigInt(0) : band;
        const auto children = generated_from_left(ctx.tax, r);
        if (BigInt(children.size()) > allowed)
            fail(show(r) + " generates " + std::to_string(children.size()) +
                 " runs from left, above its exponent band");
    }
}

void check_child_hull(WordContext& ctx) {
    for (const GenerationRecord& g : ctx.tax.secondary)
        if (!(g.pair.left.start < g.child.start && g.child.end < g.pair.right.end))
            fail(show(g.child) + " leaves the hull of " + show(g.pair));
}

void check_factor_monotonicity(WordContext& ctx) {
    std::set<Run> prev;
    bool first = true;
    for (int f = ctx.factor; f < ctx.factor + 3; ++f) {
        const Taxonomy tax = f == ctx.factor ? ctx.tax : classify(ctx.w, ctx.runs, f);
        std::set<Run> cur;
        for (const GenerationRecord& g : tax.secondary) cur.insert(g.child);
        if (!first && !std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()))
            fail("secondary set grew when the factor rose to " + std::to_string(f));
        prev = std::move(cur);
        first = false;
    }
}

void check_root_primitivity(WordContext& ctx) {
    for (const Run& r : ctx.runs.runs)
        for (const CyclicRoot& root : cyclic_roots(ctx.w, r))
            if (!is_primitive(ctx.w, root.factor()))
                fail("cyclic root at " + std::to_string(root.start) + " of " + show(r) +
                     " is imprimitive");
}

bool check_square_containment_gate(WordContext& ctx) { return ctx.n <= 64; }
void check_square_containment(WordContext& ctx) {
    const std::vector<PrimitiveSquare> by_definition = enumerate_primitive_squares(ctx.w);
    if (by_definition != ctx.squares())
        fail("run-derived primitive squares differ from the definitional enumeration");
    for (const PrimitiveSquare& sq : by_definition) {
        int owners = 0;
        for (const Run& r : ctx.runs.runs)
            if (r.period == sq.period && r.start <= sq.start &&
                sq.start + 2 * sq.period - 1 <= r.end)
                ++owners;
        if (owners != 1)
            fail("square at " + std::to_string(sq.start) + " period " +
                 std::to_string(sq.period) + " lies in " + std::to_string(owners) +
                 " same-period runs");
    }
}

void check_prop_13(WordContext& ctx) {
    std::vector<Point> all;
    for (const Run& r : ctx.runs.runs) {
        const WeightedPointSet ps = points_of_run(ctx.w, r);
        all.insert(all.end(), ps.points.begin(), ps.points.end());
    }
    std::sort(all.begin(), all.end());
    const auto dup = std::adjacent_find(all.begin(), all.end());
    if (dup != all.end())
        fail("sample point (" + std::to_string(dup->p) + ", " + std::to_string(dup->j) +
             ") belongs to two runs");
    prime_points(ctx.w, ctx.tax, 1);  // throws on primary-only overlap
}

void check_point_cardinality(WordContext& ctx) {
    for (const Run& r : ctx.runs.runs) {
        const WeightedPointSet ps = points_of_run(ctx.w, r);
        if (ps.points.empty() || BigInt(ps.points.size()) != rational_floor(r.exponent - 1))
            fail(show(r) + " yields " + std::to_string(ps.points.size()) + " sample points");
    }
}

void check_prop_14(WordContext& ctx) {
    const WeightedPointSet ps = prime_points(ctx.w, ctx.tax, 1);
    // Points arrive sorted by (p, j); only equal-p neighbors can conflict,
    // and among those only j-interval contacts matter.
    for (std::size_t x = 0; x + 1 < ps.points.size(); ++x) {
        for (std::size_t y = x + 1;
             y < ps.points.size() && ps.points[y].p == ps.points[x].p; ++y) {
            const Point& a = ps.points[x];
            const Point& b = ps.points[y];
            if (b.j - 2 * b.p / 3 <= a.j)
                fail("equal-period points (" + std::to_string(a.p) + ", " +
                     std::to_string(a.j) + ") and (" + std::to_string(b.p) + ", " +
                     std::to_string(b.j) + ") cover a common point");
        }
    }
}

void check_lemma_15(WordContext& ctx) {
    for (int lambda : ctx.lambdas) {
        const int m = max_cover_multiplicity(ctx.w, ctx.tax, lambda);
        if (m > 2)
            fail("cover multiplicity " + std::to_string(m) + " at lambda " +
                 std::to_string(lambda));
    }
}

void check_lattice_containment(WordContext& ctx) {
    const WeightedPointSet ps = prime_points(ctx.w, ctx.tax, 1);
    for (const Point& a : ps.points) {
        const bool inside = a.p >= 1 && a.p <= 2 * ctx.n / 3 && a.j >= 1 && a.j <= ctx.n;
        const bool region_inside = 4 * a.p / 3 <= 2 * ctx.n / 3 && a.j - 2 * a.p / 3 >= 1;
        if (!inside || !region_inside)
            fail("point (" + std::to_string(a.p) + ", " + std::to_string(a.j) +
                 ") or its covered region leaves the lattice");
    }
}

void require_bound(const BoundsReport& rep, const std::string& name, int lambda) {
    for (const BoundEntry& e : rep.entries) {
        if (e.name != name) continue;
        if (!e.satisfied)
            fail(name + " fails at lambda " + std::to_string(lambda) + ": measured " +
                 e.measured + " vs bound " + e.bound);
        return;
    }
    fail("bound entry " + name + " missing");
}

void check_thm_17(WordContext& ctx) {
    for (const LambdaStats& st : ctx.stats()) {
        const BoundsReport rep = theorem_bounds_report(st);
        require_bound(rep, "rp_le_eprime", st.lambda);
        require_bound(rep, "eprime_bound", st.lambda);
    }
}

void check_thm_18(WordContext& ctx) {
    for (const LambdaStats& st : ctx.stats()) {
        const BoundsReport rep = theorem_bounds_report(st);
        require_bound(rep, "exponent_sum_bound", st.lambda);
        require_bound(rep, "secondary_sum_bound", st.lambda);
    }
}

void check_thm_19(WordContext& ctx) {
    for (const LambdaStats& st : ctx.stats())
        require_bound(theorem_bounds_report(st), "letter_cover_bound", st.lambda);
}

void check_clp_consistency(WordContext& ctx) {
    for (const LambdaStats& st : ctx.stats()) {
        const int profile_max =
            st.clp_profile.empty()
                ? 0
                : *std::max_element(st.clp_profile.begin(), st.clp_profile.end());
        if (st.clp_max != profile_max || profile_max < 0)
            fail("cover profile maximum mismatch at lambda " + std::to_string(st.lambda));
        if (st.n > 0) {
            const int mid = (st.n + 1) / 2;
            int direct = 0;
            for (const Run& r : ctx.tax.primary)
                if (r.period >= st.lambda && r.start <= mid && mid <= r.end) ++direct;
            if (st.clp_profile[std::size_t(mid) - 1] != direct)
                fail("cover profile miscounts position " + std::to_string(mid) +
                     " at lambda " + std::to_string(st.lambda));
        }
    }
}

bool check_wk_structure_gate(WordContext& ctx) {
    return ctx.cw.family == "wk" && ctx.cw.param >= 2;
}
void check_wk_structure(WordContext& ctx) {
    const int k = int(ctx.cw.param);
    if (int(ctx.runs.runs.size()) != k + 2)
        fail("expected " + std::to_string(k + 2) + " runs, found " +
             std::to_string(ctx.runs.runs.size()));
    int covering_middle = 0;
    for (const Run& r : ctx.runs.runs)
        if (r.start <= 2 * k && 2 * k <= r.end) ++covering_middle;
    if (covering_middle != k + 1)
        fail("middle letter lies in " + std::to_string(covering_middle) + " runs, not " +
             std::to_string(k + 1));
    std::set<int> periods;
    for (const GenerationRecord& g : ctx.tax.secondary) {
        periods.insert(g.child.period);
        const int P = g.child.period;
        if (g.pair.sigma != 1) fail("generating pair offset is " + std::to_string(g.pair.sigma));
        if (g.child.start != 2 * k + 1 - P || g.child.end != 2 * k + P)
            fail(show(g.child) + " is not centered on the middle");
    }
    std::set<int> expected;
    for (int a = 3; a <= k - 1; ++a) expected.insert(2 * a + 1);
    if (periods != expected)
        fail("secondary periods do not form the expected odd band (count " +
             std::to_string(periods.size()) + ")");
}

struct CheckDef {
    const char* id;
    void (*fn)(WordContext&);
    bool (*gate)(WordContext&);  // nullptr: applies to every word
};

const std::vector<CheckDef>& battery() {
    static const std::vector<CheckDef> defs = {
        {"runs_oracle_equivalence", check_runs_oracle_equivalence, nullptr},
        {"minper_oracle", check_minper_oracle, check_minper_oracle_gate},
        {"lemma_1", check_lemma_1, nullptr},
        {"prop_2", check_prop_2, nullptr},
        {"prop_3", check_prop_3, nullptr},
        {"prop_4", check_prop_4, nullptr},
        {"prop_5", check_prop_5, nullptr},
        {"lemma_6", check_lemma_6, nullptr},
        {"prop_7", check_prop_7, nullptr},
        {"pair_chain", check_pair_chain, nullptr},
        {"lemma_8", check_lemma_8, nullptr},
        {"lemma_9", check_lemma_9, nullptr},
        {"lemma_10", check_lemma_10, nullptr},
        {"cor_11", check_cor_11, nullptr},
        {"cor_12", check_cor_12, nullptr},
        {"child_hull", check_child_hull, nullptr},
        {"factor_monotonicity", check_factor_monotonicity, nullptr},
        {"root_primitivity", check_root_primitivity, nullptr},
        {"square_containment", check_square_containment, check_square_containment_gate},
        {"prop_13", check_prop_13, nullptr},
        {"point_cardinality", check_point_cardinality, nullptr},
        {"prop_14", check_prop_14, nullptr},
        {"lemma_15", check_lemma_15, nullptr},
        {"lattice_containment", check_lattice_containment, nullptr},
        {"thm_17", check_thm_17, nullptr},
        {"thm_18", check_thm_18, nullptr},
        {"thm_19", check_thm_19, nullptr},
        {"clp_consistency", check_clp_consistency, nullptr},
        {"wk_structure", check_wk_structure, check_wk_structure_gate},
    };
    return defs;
}

// Library-level verification failures surface under the claim they falsify.
std::string claim_to_check_id(const std::string& claim) {
    if (claim == "generator_uniqueness") return "lemma_9";
    if (claim == "generated_run_shape") return "lemma_10";
    if (claim == "point_disjointness") return "prop_13";
    if (claim == "sigma") return "lemma_6";
    if (claim == "cognate_pairs") return "prop_4";
    return claim;
}

struct CheckState {
    long long checked = 0;
    bool failed = false;
    int fail_len = INT_MAX;
    std::string fail_word;
    std::string detail;
};

void record_failure(std::map<std::string, CheckState>& states, const std::string& id,
                    const Word& w, const std::string& detail) {
    CheckState& st = states[id];
    const std::string text = to_string(w);
    if (!st.failed || std::pair(w.size(), text) < std::pair(st.fail_len, st.fail_word)) {
        st.failed = true;
        st.fail_len = w.size();
        st.fail_word = text;
        st.detail = detail;
    }
}

}  // namespace

std::vector<CheckOutcome> run_all_checks(const CorpusSpec& corpus,
                                         const std::vector<int>& lambdas, int factor) {
    return run_all_checks(materialize_corpus(corpus), lambdas, factor);
}

std::vector<CheckOutcome> run_all_checks(const std::vector<CorpusWord>& words,
                                         const std::vector<int>& lambdas, int factor) {
    if (words.empty()) return {};

    std::map<std::string, CheckState> states;
    for (const CheckDef& def : battery()) states[def.id];

    for (const CorpusWord& cw : words) {
        std::optional<WordContext> ctx;
        try {
            ctx.emplace(cw, factor, lambdas);
        } catch (const VerificationError& e) {
            record_failure(states, claim_to_check_id(e.claim()), cw.word, e.what());
            continue;
        }
        for (const CheckDef& def : battery()) {
            if (def.gate != nullptr && !def.gate(*ctx)) continue;
            CheckState& st = states[def.id];
            ++st.checked;
            try {
                def.fn(*ctx);
            } catch (const CheckFailure& f) {
                record_failure(states, def.id, cw.word, f.detail);
            } catch (const VerificationError& e) {
                record_failure(states, claim_to_check_id(e.claim()), cw.word, e.what());
                if (claim_to_check_id(e.claim()) != def.id)
                    record_failure(states, def.id, cw.word,
                                   std::string("aborted: ") + e.what());
            }
        }
    }

    std::vector<CheckOutcome> outcomes;
    for (const auto& [id, st] : states) {
        CheckOutcome oc;
        oc.check_id = id;
        oc.passed = !st.failed;
        oc.word = st.failed ? st.fail_word : "";
        oc.counterexample = st.detail;
        oc.words_checked = st.checked;
        outcomes.push_back(std::move(oc));
    }
    std::sort(outcomes.begin(), outcomes.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
        return std::tie(a.word, a.check_id) < std::tie(b.word, b.check_id);
    });
    return outcomes;
}

MaxrunsReport conjecture_maxruns(int alphabet_size, int max_len) {
    if (alphabet_size < 2) throw std::invalid_argument("conjecture_maxruns: alphabet too small");
    if (max_len < 1) throw std::invalid_argument("conjecture_maxruns: max_len must be >= 1");
    MaxrunsReport rep;
    rep.alphabet_size = alphabet_size;
    rep.max_len = max_len;
    rep.all_argmax_secondary_free = true;

    std::string cur;
    for (int n = 1; n <= max_len; ++n) {
        MaxrunsRow row;
        row.n = n;
        cur.assign(std::size_t(n), '0');
        // Canonical representatives: each symbol first appears only after all
        // smaller symbols did. Run counts are renaming-invariant.
        std::function<void(int, int)> rec = [&](int pos, int used) {
            if (pos == n) {
                ++row.words_enumerated;
                const Word w = make_word(cur);
                const int count = int(find_runs_oracle(w).runs.size());
                if (count > row.max_runs) {
                    row.max_runs = count;
                    row.argmax_words.clear();
                }
                if (count == row.max_runs) row.argmax_words.push_back(cur);
                return;
            }
            const int limit = std::min(used + 1, alphabet_size);
            for (int s = 0; s < limit; ++s) {
                cur[std::size_t(pos)] = char('0' + s);
                rec(pos + 1, std::max(used, s + 1));
            }
        };
        rec(0, 0);
        for (const std::string& text : row.argmax_words) {
            const Word w = make_word(text);
            const bool free_of_secondary = classify(w, find_runs(w)).secondary.empty();
            row.secondary_free.push_back(free_of_secondary);
            if (!free_of_secondary) rep.all_argmax_secondary_free = false;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

FactorSweepReport factor_sweep(const CorpusSpec& corpus, const std::vector<int>& factors,
                               const std::vector<int>& lambdas) {
    for (int f : factors)
        if (f < 3) throw std::invalid_argument("factor_sweep: factors must be >= 3");
    const std::vector<CorpusWord> words = materialize_corpus(corpus);

    FactorSweepReport rep;
    for (int f : factors) {
        FactorReport fr;
        fr.factor = f;
        rep.factors.push_back(fr);
    }
    rep.monotone = true;
    for (auto& fr : rep.factors) fr.bounds_all_satisfied = true;

    for (const CorpusWord& cw : words) {
        const RunSet rs = find_runs(cw.word);
        std::set<Run> prev;
        for (std::size_t fi = 0; fi < factors.size(); ++fi) {
            FactorReport& fr = rep.factors[fi];
            ++fr.words;
            const Taxonomy tax = classify(cw.word, rs, factors[fi]);
            fr.secondary_total += static_cast<long long>(tax.secondary.size());
            for (int lambda : lambdas) {
                const BoundsReport bounds = theorem_bounds_report(lambda_stats(cw.word, tax, lambda));
                if (!bounds.all_satisfied) fr.bounds_all_satisfied = false;
            }
            std::set<Run> cur;
            for (const GenerationRecord& g : tax.secondary) cur.insert(g.child);
            if (fi > 0 && !std::includes(prev.begin(), prev.end(), cur.begin(), cur.end())) {
                fr.monotone_vs_previous = false;
                rep.monotone = false;
            }
            prev = std::move(cur);
        }
    }
    return rep;
}

}  // namespace reps
