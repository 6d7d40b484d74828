#include <random>
#include <stdexcept>

#include "reps/verify.hpp"

namespace reps {

CorpusSpec default_corpus() {
    CorpusSpec spec;
    spec.exhaustive = {{2, 14}, {3, 9}};
    std::vector<long long> wk_params;
    for (long long k = 1; k <= 50; ++k) wk_params.push_back(k);
    // Prefix ladder: every length up to 32, then doubling with midpoints.
    std::vector<long long> prefix_ladder;
    for (long long len = 1; len <= 32; ++len) prefix_ladder.push_back(len);
    for (long long len : {48, 64, 96, 128, 192, 256, 384, 512}) prefix_ladder.push_back(len);
    spec.families = {{"wk", wk_params},
                     {"fibonacci", prefix_ladder},
                     {"thue_morse", prefix_ladder}};
    spec.random = {1000, 200, 1729};
    return spec;
}

std::vector<CorpusWord> materialize_corpus(const CorpusSpec& spec) {
    std::vector<CorpusWord> out;
    for (const auto& [alphabet, max_len] : spec.exhaustive) {
        if (alphabet < 1 || max_len < 0)
            throw std::invalid_argument("materialize_corpus: bad exhaustive block");
        const std::string tag =
            "exhaustive(" + std::to_string(alphabet) + "," + std::to_string(max_len) + ")";
        for (int len = 0; len <= max_len; ++len)
            for_each_word(alphabet, len,
                          [&](const Word& w) { out.push_back({w, tag, "", 0}); });
    }
    for (const auto& [family, params] : spec.families) {
        for (long long param : params) {
            CorpusWord cw;
            cw.word = family_word(family, param);
            cw.source = family + "(" + std::to_string(param) + ")";
            cw.family = family;
            cw.param = param;
            out.push_back(std::move(cw));
        }
    }
    if (spec.random.count > 0) {
        if (spec.random.length < 0)
            throw std::invalid_argument("materialize_corpus: bad random length");
        // rng() & 1 rather than a distribution: distributions may differ
        // between standard library implementations, the raw stream does not.
        std::mt19937_64 rng(spec.random.seed);
        for (int c = 0; c < spec.random.count; ++c) {
            std::string s(std::size_t(spec.random.length), '0');
            for (char& ch : s) ch = char('0' + (rng() & 1));
            out.push_back({make_word(s), "random[" + std::to_string(c) + "]", "", 0});
        }
    }
    return out;
}

}  // namespace reps
