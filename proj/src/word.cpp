#include "reps/word.hpp"

namespace reps {

Word make_word(std::string_view text) {
    return Word(std::vector<char>(text.begin(), text.end()));
}

std::string to_string(const Word& w) {
    return std::string(w.raw().begin(), w.raw().end());
}

Word wk_word(int k) {
    if (k < 1) throw std::invalid_argument("wk family needs k >= 1");
    std::vector<char> syms;
    syms.reserve(static_cast<std::size_t>(4 * k));
    for (int i = 0; i < k; ++i) {
        syms.push_back('0');
        syms.push_back('1');
    }
    for (int i = 0; i < k; ++i) {
        syms.push_back('1');
        syms.push_back('0');
    }
    return Word(std::move(syms));
}

Word fibonacci_word(int len) {
    if (len < 1) throw std::invalid_argument("fibonacci family needs length >= 1");
    // Iterate the morphism from "0" until the prefix is long enough.
    std::string cur = "0";
    while (static_cast<int>(cur.size()) < len) {
        std::string next;
        next.reserve(cur.size() * 2);
        for (char c : cur) next += (c == '0') ? "01" : "0";
        cur = std::move(next);
    }
    cur.resize(static_cast<std::size_t>(len));
    return make_word(cur);
}

Word thue_morse_word(int len) {
    if (len < 1) throw std::invalid_argument("thue_morse family needs length >= 1");
    std::vector<char> syms(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        syms[static_cast<std::size_t>(i)] =
            (__builtin_popcount(static_cast<unsigned>(i)) & 1) ? '1' : '0';
    return Word(std::move(syms));
}

Word family_word(std::string_view family, long long param) {
    if (param < 1 || param > 1'000'000)
        throw std::invalid_argument("family parameter out of range");
    int p = static_cast<int>(param);
    if (family == "wk") return wk_word(p);
    if (family == "fibonacci") return fibonacci_word(p);
    if (family == "thue_morse") return thue_morse_word(p);
    throw std::invalid_argument("unknown family: " + std::string(family));
}

void for_each_word(int alphabet, int len, const std::function<void(const Word&)>& fn) {
    if (alphabet < 1 || alphabet > 64) throw std::invalid_argument("alphabet size out of range");
    if (len < 0) throw std::invalid_argument("negative word length");
    std::vector<char> syms(static_cast<std::size_t>(len), '0');
    while (true) {
        fn(Word(std::vector<char>(syms)));
        int pos = len - 1;
        while (pos >= 0 && syms[static_cast<std::size_t>(pos)] == '0' + alphabet - 1) {
            syms[static_cast<std::size_t>(pos)] = '0';
            --pos;
        }
        if (pos < 0) break;
        ++syms[static_cast<std::size_t>(pos)];
    }
}

std::vector<Word> all_words(int alphabet, int len) {
    std::vector<Word> out;
    for_each_word(alphabet, len, [&](const Word& w) { out.push_back(w); });
    return out;
}

}  // namespace reps
