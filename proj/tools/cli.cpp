// Command-line front end: analyze one word, verify a corpus, or run the
// non-assertive survey modes. Exit codes: 0 success, 1 verification failure,
// 2 usage error (bad flags, unreadable input).
#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reps/report.hpp"
#include "reps/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace reps;

[[noreturn]] void usage_error(const std::string& message) {
    throw CLI::ValidationError("input", message);
}

long long parse_ll(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        usage_error("expected an integer for " + what + ", got '" + text + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

// UTF-8 to code points; rejects malformed sequences.
std::vector<std::uint32_t> decode_utf8(const std::string& bytes) {
    std::vector<std::uint32_t> points;
    std::size_t i = 0;
    while (i < bytes.size()) {
        const unsigned char b0 = static_cast<unsigned char>(bytes[i]);
        int extra = 0;
        std::uint32_t cp = 0;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            cp = b0 & 0x1Fu;
            extra = 1;
        } else if ((b0 & 0xF0) == 0xE0) {
            cp = b0 & 0x0Fu;
            extra = 2;
        } else if ((b0 & 0xF8) == 0xF0) {
            cp = b0 & 0x07u;
            extra = 3;
        } else {
            usage_error("invalid UTF-8 at byte " + std::to_string(i));
        }
        if (i + std::size_t(extra) >= bytes.size())
            usage_error("truncated UTF-8 sequence at byte " + std::to_string(i));
        for (int k = 1; k <= extra; ++k) {
            const unsigned char bk = static_cast<unsigned char>(bytes[i + std::size_t(k)]);
            if ((bk & 0xC0) != 0x80)
                usage_error("invalid UTF-8 continuation at byte " + std::to_string(i + std::size_t(k)));
            cp = (cp << 6) | (bk & 0x3Fu);
        }
        points.push_back(cp);
        i += std::size_t(extra) + 1;
    }
    return points;
}

// The analysis engine compares symbols only for equality, so any alphabet of
// at most 256 distinct symbols can be recoded onto bytes faithfully.
Word word_from_code_points(const std::vector<std::uint32_t>& points) {
    std::vector<std::uint32_t> seen;
    std::vector<char> syms;
    syms.reserve(points.size());
    for (std::uint32_t cp : points) {
        std::size_t code = seen.size();
        for (std::size_t d = 0; d < seen.size(); ++d) {
            if (seen[d] == cp) {
                code = d;
                break;
            }
        }
        if (code == seen.size()) {
            if (seen.size() >= 256) usage_error("more than 256 distinct symbols in input");
            seen.push_back(cp);
        }
        syms.push_back(char(static_cast<unsigned char>(code)));
    }
    return Word(std::move(syms));
}

struct AnalyzeArgs {
    std::string word;
    std::string file;
    bool text_mode = false;
    std::string family;
    long long param = 0;
    bool word_given = false, file_given = false, gen_given = false;
    std::vector<int> lambdas;
    int factor = 3;
    std::string format = "text";
    bool with_checks = false;
};

int run_analyze(const AnalyzeArgs& a) {
    const int sources = int(a.word_given) + int(a.file_given) + int(a.gen_given);
    if (sources != 1)
        usage_error("exactly one input source required: --word, --file, or --gen");
    for (int lambda : a.lambdas)
        if (lambda < 1) usage_error("--lambda values must be >= 1");
    if (a.factor < 3) usage_error("--factor must be >= 3");

    Word w;
    std::string source;
    if (a.word_given) {
        w = make_word(a.word);
        source = a.word;
    } else if (a.file_given) {
        std::ifstream in(a.file, std::ios::binary);
        if (!in) usage_error("cannot read file '" + a.file + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string bytes = buf.str();
        w = a.text_mode ? word_from_code_points(decode_utf8(bytes)) : make_word(bytes);
        source = a.file;
    } else {
        try {
            w = family_word(a.family, a.param);
        } catch (const std::invalid_argument& e) {
            usage_error(e.what());
        }
        source = a.family + "(" + std::to_string(a.param) + ")";
    }

    const std::vector<int> lambdas =
        a.lambdas.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8} : a.lambdas;
    const AnalysisReport rep = analyze_word(w, source, lambdas, a.factor, a.with_checks,
                                            a.gen_given ? a.family : "", a.param);
    if (a.format == "json")
        std::cout << to_json(rep);
    else if (a.format == "csv")
        std::cout << to_csv(rep);
    else
        std::cout << to_text(rep);
    return rep.checks && !all_passed(*rep.checks) ? 1 : 0;
}

struct VerifyArgs {
    std::vector<std::string> exhaustive;
    std::vector<std::string> families;
    std::string random;
    bool lambda_sweep = false;
    int factor = 3;
};

CorpusSpec corpus_from_flags(const VerifyArgs& v) {
    CorpusSpec spec;
    for (const std::string& block : v.exhaustive) {
        const auto parts = split(block, ',');
        if (parts.size() != 2) usage_error("--exhaustive expects A,L, got '" + block + "'");
        spec.exhaustive.emplace_back(int(parse_ll(parts[0], "--exhaustive alphabet")),
                                     int(parse_ll(parts[1], "--exhaustive length")));
    }
    for (const std::string& fam : v.families) {
        const auto colon = fam.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == fam.size())
            usage_error("--family expects NAME:RANGE, got '" + fam + "'");
        const std::string name = fam.substr(0, colon);
        const std::string range = fam.substr(colon + 1);
        std::vector<long long> params;
        const auto dots = range.find("..");
        if (dots == std::string::npos) {
            params.push_back(parse_ll(range, "--family parameter"));
        } else {
            const long long lo = parse_ll(range.substr(0, dots), "--family range start");
            const long long hi = parse_ll(range.substr(dots + 2), "--family range end");
            if (lo > hi) usage_error("--family range is empty: '" + range + "'");
            for (long long k = lo; k <= hi; ++k) params.push_back(k);
        }
        spec.families.emplace_back(name, std::move(params));
    }
    if (!v.random.empty()) {
        const auto parts = split(v.random, ',');
        if (parts.size() != 3) usage_error("--random expects N,LEN,SEED, got '" + v.random + "'");
        spec.random.count = int(parse_ll(parts[0], "--random count"));
        spec.random.length = int(parse_ll(parts[1], "--random length"));
        spec.random.seed = std::uint64_t(parse_ll(parts[2], "--random seed"));
    }
    return spec;
}

int run_verify(const VerifyArgs& v) {
    if (v.factor < 3) usage_error("--factor must be >= 3");
    const CorpusSpec spec = corpus_from_flags(v);
    const std::vector<int> lambdas = {1, 2, 3, 4, 5, 6, 7, 8};

    std::vector<CorpusWord> words;
    try {
        words = materialize_corpus(spec);
    } catch (const std::invalid_argument& e) {
        usage_error(e.what());
    }
    if (words.empty())
        std::cerr << "warning: empty corpus, nothing verified\n";

    const auto outcomes = run_all_checks(words, lambdas, v.factor);

    ordered_json j;
    j["words"] = words.size();
    j["factor"] = v.factor;
    j["all_passed"] = all_passed(outcomes);
    j["checks"] = ordered_json::array();
    int passed = 0;
    for (const CheckOutcome& oc : outcomes) {
        ordered_json jc;
        jc["check_id"] = oc.check_id;
        jc["passed"] = oc.passed;
        jc["word"] = oc.word;
        jc["counterexample"] = oc.counterexample;
        jc["words_checked"] = oc.words_checked;
        j["checks"].push_back(std::move(jc));
        passed += oc.passed ? 1 : 0;
    }

    if (v.lambda_sweep) {
        // Aggregate statistics per lambda across the corpus.
        struct Agg {
            long long rp = 0, rs = 0, eprime = 0;
            int clp_max = 0;
            bool bounds_ok = true;
        };
        std::vector<Agg> aggs(lambdas.size());
        for (const CorpusWord& cw : words) {
            const RunSet rs = find_runs(cw.word);
            const Taxonomy tax = classify(cw.word, rs, v.factor);
            for (std::size_t li = 0; li < lambdas.size(); ++li) {
                const LambdaStats st = lambda_stats(cw.word, tax, lambdas[li]);
                Agg& agg = aggs[li];
                agg.rp += st.rp_count;
                agg.rs += st.rs_count;
                agg.eprime += st.eprime_count;
                agg.clp_max = std::max(agg.clp_max, st.clp_max);
                if (!theorem_bounds_report(st).all_satisfied) agg.bounds_ok = false;
            }
        }
        j["lambda_sweep"] = ordered_json::array();
        for (std::size_t li = 0; li < lambdas.size(); ++li) {
            ordered_json js;
            js["lambda"] = lambdas[li];
            js["total_rp"] = aggs[li].rp;
            js["total_rs"] = aggs[li].rs;
            js["total_eprime"] = aggs[li].eprime;
            js["max_clp"] = aggs[li].clp_max;
            js["bounds_all_satisfied"] = aggs[li].bounds_ok;
            j["lambda_sweep"].push_back(std::move(js));
        }
    }

    std::cout << j.dump(2) << "\n";
    std::cerr << "verified " << words.size() << " words: " << passed << "/" << outcomes.size()
              << " checks passed\n";
    for (const CheckOutcome& oc : outcomes)
        if (!oc.passed)
            std::cerr << "FAIL " << oc.check_id << " on '" << oc.word
                      << "': " << oc.counterexample << "\n";
    return all_passed(outcomes) ? 0 : 1;
}

struct ConjectureArgs {
    std::string maxruns;
    std::string factor_sweep;
};

int run_conjecture(const ConjectureArgs& c) {
    if (c.maxruns.empty() == c.factor_sweep.empty())
        usage_error("exactly one of --maxruns or --factor-sweep required");

    if (!c.maxruns.empty()) {
        const auto parts = split(c.maxruns, ',');
        if (parts.size() != 2) usage_error("--maxruns expects A,MAXLEN, got '" + c.maxruns + "'");
        const int alphabet = int(parse_ll(parts[0], "--maxruns alphabet"));
        const int max_len = int(parse_ll(parts[1], "--maxruns length"));
        MaxrunsReport rep;
        try {
            rep = conjecture_maxruns(alphabet, max_len);
        } catch (const std::invalid_argument& e) {
            usage_error(e.what());
        }
        std::cout << "maximum run counts over alphabet size " << rep.alphabet_size
                  << ", lengths 1.." << rep.max_len << "\n";
        for (const MaxrunsRow& row : rep.rows) {
            std::cout << "n=" << row.n << " mrn=" << row.max_runs
                      << " enumerated=" << row.words_enumerated << " argmax("
                      << row.argmax_words.size() << "):";
            for (std::size_t i = 0; i < row.argmax_words.size(); ++i) {
                std::cout << " " << row.argmax_words[i];
                if (!row.secondary_free[i]) std::cout << "(!)";
            }
            std::cout << "\n";
        }
        std::cout << "all argmax words secondary-free: "
                  << (rep.all_argmax_secondary_free ? "yes" : "no") << "\n";
        return 0;
    }

    std::vector<int> factors;
    for (const std::string& part : split(c.factor_sweep, ','))
        factors.push_back(int(parse_ll(part, "--factor-sweep entry")));
    for (int f : factors)
        if (f < 3) usage_error("--factor-sweep entries must be >= 3");
    const CorpusSpec corpus = default_corpus();
    const FactorSweepReport rep = factor_sweep(corpus, factors);
    std::cout << "generation factor sweep over the built-in corpus\n";
    for (const FactorReport& fr : rep.factors) {
        std::cout << "factor=" << fr.factor << " words=" << fr.words
                  << " secondary=" << fr.secondary_total
                  << " bounds_satisfied=" << (fr.bounds_all_satisfied ? "yes" : "no")
                  << " monotone_vs_previous=" << (fr.monotone_vs_previous ? "yes" : "no")
                  << "\n";
    }
    std::cout << "secondary sets nested along the sweep: " << (rep.monotone ? "yes" : "no")
              << "\n";
    return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"maximal repetition analysis: runs, primary/secondary structure, bounds"};
    app.require_subcommand(1);

    AnalyzeArgs an;
    CLI::App* analyze = app.add_subcommand("analyze", "analyze one word and print a report");
    auto* oword = analyze->add_option("--word", an.word, "literal word (bytes as symbols)");
    auto* ofile = analyze->add_option("--file", an.file, "read the word from a file (raw bytes)");
    analyze->add_flag("--text", an.text_mode, "decode --file as UTF-8, one symbol per code point");
    auto* ogen = analyze->add_option("--gen", an.family, "family word: wk, fibonacci, thue_morse");
    auto* oparam = analyze->add_option("--param", an.param, "family parameter");
    analyze->add_option("--lambda", an.lambdas, "period filter, repeatable (default 1..8)");
    analyze->add_option("--factor", an.factor, "generation factor (default 3)");
    analyze->add_option("--format", an.format, "output format (default text)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    analyze->add_flag("--check", an.with_checks, "run the invariant battery on this word");
    oword->excludes(ofile)->excludes(ogen);
    ofile->excludes(ogen);
    ogen->needs(oparam);
    oparam->needs(ogen);

    VerifyArgs vf;
    CLI::App* verify = app.add_subcommand("verify", "run the check battery over a corpus");
    verify->add_option("--exhaustive", vf.exhaustive, "A,L: all words over A symbols up to length L (repeatable)");
    verify->add_option("--family", vf.families, "NAME:RANGE, e.g. wk:2..50 (repeatable)");
    verify->add_option("--random", vf.random, "N,LEN,SEED: seeded random binary words");
    verify->add_flag("--lambda-sweep", vf.lambda_sweep, "add per-lambda aggregate statistics");
    verify->add_option("--factor", vf.factor, "generation factor (default 3)");

    ConjectureArgs cj;
    CLI::App* conjecture = app.add_subcommand("conjecture", "non-assertive surveys");
    conjecture->add_option("--maxruns", cj.maxruns, "A,MAXLEN: run-count maxima by exhaustive search");
    conjecture->add_option("--factor-sweep", cj.factor_sweep,
                           "G1,G2,...: reclassify the built-in corpus per factor");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) {
            an.word_given = oword->count() > 0;
            an.file_given = ofile->count() > 0;
            an.gen_given = ogen->count() > 0;
            return run_analyze(an);
        }
        if (verify->parsed()) return run_verify(vf);
        return run_conjecture(cj);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
