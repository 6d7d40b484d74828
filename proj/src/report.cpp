#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "reps/report.hpp"

namespace reps {
namespace {

using ordered_json = nlohmann::ordered_json;

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
        throw std::runtime_error("parse_report: malformed rational '" + text + "'");
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

int run_index(const std::vector<Run>& runs, const Run& r) {
    const auto it = std::lower_bound(runs.begin(), runs.end(), r);
    if (it == runs.end() || !(*it == r))
        throw std::logic_error("analyze_word: generator run missing from the run list");
    return int(it - runs.begin());
}

ordered_json run_to_json(const RunReport& rr) {
    ordered_json j;
    j["start"] = rr.run.start;
    j["end"] = rr.run.end;
    j["period"] = rr.run.period;
    j["exponent"] = rational_str(rr.run.exponent);
    j["class"] = rr.primary ? "primary" : "secondary";
    if (!rr.primary) {
        ordered_json g;
        g["left"] = rr.gen_left;
        g["right"] = rr.gen_right;
        g["alpha"] = rr.alpha;
        g["sigma"] = rr.sigma;
        j["generator"] = std::move(g);
    }
    return j;
}

ordered_json lambda_to_json(const LambdaSection& sec) {
    ordered_json j;
    j["lambda"] = sec.stats.lambda;
    j["rp"] = sec.stats.rp_count;
    j["rs"] = sec.stats.rs_count;
    j["exp_sum"] = rational_str(sec.stats.exp_sum);
    j["exs_sum"] = rational_str(sec.stats.exs_sum);
    j["eprime"] = sec.stats.eprime_count;
    j["clp_max"] = sec.stats.clp_max;
    j["clp_profile"] = sec.stats.clp_profile;
    ordered_json b;
    b["all_satisfied"] = sec.bounds.all_satisfied;
    b["entries"] = ordered_json::array();
    for (const BoundEntry& e : sec.bounds.entries) {
        ordered_json je;
        je["name"] = e.name;
        je["measured"] = e.measured;
        je["bound"] = e.bound;
        je["satisfied"] = e.satisfied;
        je["vacuous"] = e.vacuous;
        b["entries"].push_back(std::move(je));
    }
    j["bounds"] = std::move(b);
    return j;
}

}  // namespace

AnalysisReport analyze_word(const Word& w, const std::string& source,
                            const std::vector<int>& lambdas, int factor, bool with_checks,
                            const std::string& family, long long param) {
    AnalysisReport rep;
    rep.source = source;
    rep.length = w.size();
    rep.alphabet = alphabet_size(w);
    rep.factor = factor;

    const RunSet rs = find_runs(w);
    const Taxonomy tax = classify(w, rs, factor);
    for (const Run& r : rs.runs) {
        RunReport rr;
        rr.run = r;
        rr.primary = tax.is_primary(r);
        if (!rr.primary) {
            const auto it = std::lower_bound(
                tax.secondary.begin(), tax.secondary.end(), r,
                [](const GenerationRecord& g, const Run& key) { return g.child < key; });
            if (it == tax.secondary.end() || !(it->child == r))
                throw std::logic_error("analyze_word: secondary run without a record");
            rr.gen_left = run_index(rs.runs, it->pair.left);
            rr.gen_right = run_index(rs.runs, it->pair.right);
            rr.alpha = it->alpha;
            rr.sigma = it->pair.sigma;
        }
        rep.runs.push_back(std::move(rr));
    }

    for (int lambda : lambdas) {
        LambdaSection sec;
        sec.stats = lambda_stats(w, tax, lambda);
        sec.bounds = theorem_bounds_report(sec.stats);
        rep.lambdas.push_back(std::move(sec));
    }

    if (with_checks)
        rep.checks = run_all_checks(std::vector<CorpusWord>{{w, source, family, param}},
                                    lambdas, factor);
    return rep;
}

std::string to_json(const AnalysisReport& r) {
    ordered_json j;
    j["word"] = {{"source", r.source}, {"length", r.length}, {"alphabet", r.alphabet}};
    j["factor"] = r.factor;
    j["runs"] = ordered_json::array();
    for (const RunReport& rr : r.runs) j["runs"].push_back(run_to_json(rr));
    j["lambda_stats"] = ordered_json::array();
    for (const LambdaSection& sec : r.lambdas) j["lambda_stats"].push_back(lambda_to_json(sec));
    if (r.checks) {
        j["checks"] = ordered_json::array();
        for (const CheckOutcome& oc : *r.checks) {
            ordered_json jc;
            jc["check_id"] = oc.check_id;
            jc["passed"] = oc.passed;
            jc["word"] = oc.word;
            jc["counterexample"] = oc.counterexample;
            jc["words_checked"] = oc.words_checked;
            j["checks"].push_back(std::move(jc));
        }
    }
    return j.dump(2) + "\n";
}

AnalysisReport parse_report(const std::string& json_text) {
    try {
        const ordered_json j = ordered_json::parse(json_text);
        AnalysisReport r;
        r.source = j.at("word").at("source").get<std::string>();
        r.length = j.at("word").at("length").get<int>();
        r.alphabet = j.at("word").at("alphabet").get<int>();
        r.factor = j.at("factor").get<int>();
        for (const auto& jr : j.at("runs")) {
            RunReport rr;
            rr.run.start = jr.at("start").get<int>();
            rr.run.end = jr.at("end").get<int>();
            rr.run.period = jr.at("period").get<int>();
            rr.run.exponent = parse_rational(jr.at("exponent").get<std::string>());
            const std::string cls = jr.at("class").get<std::string>();
            if (cls != "primary" && cls != "secondary")
                throw std::runtime_error("parse_report: unknown class '" + cls + "'");
            rr.primary = cls == "primary";
            if (!rr.primary) {
                const auto& g = jr.at("generator");
                rr.gen_left = g.at("left").get<int>();
                rr.gen_right = g.at("right").get<int>();
                rr.alpha = g.at("alpha").get<int>();
                rr.sigma = g.at("sigma").get<int>();
            }
            r.runs.push_back(std::move(rr));
        }
        for (const auto& js : j.at("lambda_stats")) {
            LambdaSection sec;
            sec.stats.lambda = js.at("lambda").get<int>();
            sec.stats.n = r.length;
            sec.stats.rp_count = js.at("rp").get<int>();
            sec.stats.rs_count = js.at("rs").get<int>();
            sec.stats.exp_sum = parse_rational(js.at("exp_sum").get<std::string>());
            sec.stats.exs_sum = parse_rational(js.at("exs_sum").get<std::string>());
            sec.stats.eprime_count = js.at("eprime").get<long long>();
            sec.stats.clp_profile = js.at("clp_profile").get<std::vector<int>>();
            sec.stats.clp_max = js.at("clp_max").get<int>();
            const auto& jb = js.at("bounds");
            sec.bounds.lambda = sec.stats.lambda;
            sec.bounds.n = r.length;
            sec.bounds.all_satisfied = jb.at("all_satisfied").get<bool>();
            for (const auto& je : jb.at("entries")) {
                BoundEntry e;
                e.name = je.at("name").get<std::string>();
                e.measured = je.at("measured").get<std::string>();
                e.bound = je.at("bound").get<std::string>();
                e.satisfied = je.at("satisfied").get<bool>();
                e.vacuous = je.at("vacuous").get<bool>();
                sec.bounds.entries.push_back(std::move(e));
            }
            r.lambdas.push_back(std::move(sec));
        }
        if (j.contains("checks")) {
            std::vector<CheckOutcome> checks;
            for (const auto& jc : j.at("checks")) {
                CheckOutcome oc;
                oc.check_id = jc.at("check_id").get<std::string>();
                oc.passed = jc.at("passed").get<bool>();
                oc.word = jc.at("word").get<std::string>();
                oc.counterexample = jc.at("counterexample").get<std::string>();
                oc.words_checked = jc.at("words_checked").get<long long>();
                checks.push_back(std::move(oc));
            }
            r.checks = std::move(checks);
        }
        return r;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("parse_report: ") + e.what());
    }
}

std::string to_csv(const AnalysisReport& r) {
    std::string out = "start,end,period,exp_num,exp_den,class,gen_left,gen_right,alpha,sigma\n";
    for (const RunReport& rr : r.runs) {
        out += std::to_string(rr.run.start) + "," + std::to_string(rr.run.end) + "," +
               std::to_string(rr.run.period) + "," +
               numerator(rr.run.exponent).str() + "," +
               denominator(rr.run.exponent).str() + ",";
        if (rr.primary) {
            out += "primary,,,,\n";
        } else {
            out += "secondary," + std::to_string(rr.gen_left) + "," +
                   std::to_string(rr.gen_right) + "," + std::to_string(rr.alpha) + "," +
                   std::to_string(rr.sigma) + "\n";
        }
    }
    return out;
}

std::string to_text(const AnalysisReport& r) {
    std::string out = "word " + r.source + ": length " + std::to_string(r.length) +
                      ", alphabet " + std::to_string(r.alphabet) + ", factor " +
                      std::to_string(r.factor) + "\n";
    int secondary = 0;
    for (const RunReport& rr : r.runs) secondary += rr.primary ? 0 : 1;
    out += "runs: " + std::to_string(r.runs.size()) + " (" +
           std::to_string(r.runs.size() - std::size_t(secondary)) + " primary, " +
           std::to_string(secondary) + " secondary)\n";
    for (std::size_t i = 0; i < r.runs.size(); ++i) {
        const RunReport& rr = r.runs[i];
        out += "  #" + std::to_string(i) + " [" + std::to_string(rr.run.start) + ".." +
               std::to_string(rr.run.end) + "] period=" + std::to_string(rr.run.period) +
               " exponent=" + rational_str(rr.run.exponent);
        if (rr.primary) {
            out += " primary\n";
        } else {
            out += " secondary generator=(#" + std::to_string(rr.gen_left) + ",#" +
                   std::to_string(rr.gen_right) + ") alpha=" + std::to_string(rr.alpha) +
                   " sigma=" + std::to_string(rr.sigma) + "\n";
        }
    }
    for (const LambdaSection& sec : r.lambdas) {
        const LambdaStats& st = sec.stats;
        out += "lambda=" + std::to_string(st.lambda) + ": rp=" + std::to_string(st.rp_count) +
               " rs=" + std::to_string(st.rs_count) + " exp_sum=" + rational_str(st.exp_sum) +
               " exs_sum=" + rational_str(st.exs_sum) +
               " eprime=" + std::to_string(st.eprime_count) +
               " clp_max=" + std::to_string(st.clp_max) + "\n";
        for (const BoundEntry& e : sec.bounds.entries) {
            out += "  " + e.name + ": measured=" + e.measured + " bound=" + e.bound +
                   (e.vacuous ? " (vacuous)" : "") + (e.satisfied ? " ok" : " FAIL") + "\n";
        }
    }
    if (r.checks) {
        int passed = 0;
        for (const CheckOutcome& oc : *r.checks) passed += oc.passed ? 1 : 0;
        out += "checks: " + std::to_string(passed) + "/" + std::to_string(r.checks->size()) +
               " passed\n";
        for (const CheckOutcome& oc : *r.checks)
            if (!oc.passed)
                out += "  FAIL " + oc.check_id + " on '" + oc.word + "': " +
                       oc.counterexample + "\n";
    }
    return out;
}

}  // namespace reps
