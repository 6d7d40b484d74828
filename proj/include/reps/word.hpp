// Words over a generic equality-comparable alphabet. Positions are 1-based
// everywhere in this library; w[i..j] denotes the factor with inclusive ends.
#pragma once

#include <cassert>
#include <concepts>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace reps {

template <typename S>
concept Symbol = std::equality_comparable<S> && std::copy_constructible<S>;

template <Symbol S>
class BasicWord {
  public:
    BasicWord() = default;
    explicit BasicWord(std::vector<S> syms) : syms_(std::move(syms)) {}

    int size() const { return static_cast<int>(syms_.size()); }
    bool empty() const { return syms_.empty(); }

    // 1-based access: valid for 1 <= i <= size().
    const S& at(int i) const {
        assert(i >= 1 && i <= size());
        return syms_[static_cast<std::size_t>(i - 1)];
    }

    std::span<const S> raw() const { return syms_; }

    friend bool operator==(const BasicWord&, const BasicWord&) = default;

  private:
    std::vector<S> syms_;
};

using Word = BasicWord<char>;

Word make_word(std::string_view text);
std::string to_string(const Word& w);

// Factor w[start..end], inclusive 1-based bounds; valid factors are nonempty.
struct Factor {
    int start = 0;
    int end = 0;

    int length() const { return end - start + 1; }
    friend bool operator==(const Factor&, const Factor&) = default;
};

template <Symbol S>
Factor whole(const BasicWord<S>& w) {
    return Factor{1, w.size()};
}

template <Symbol S>
void require_factor(const BasicWord<S>& w, Factor f) {
    if (f.start < 1 || f.end > w.size() || f.start > f.end)
        throw std::out_of_range("factor [" + std::to_string(f.start) + ".." +
                                std::to_string(f.end) + "] invalid for word of length " +
                                std::to_string(w.size()));
}

// Dense integer codes in first-occurrence order; requires only equality on S.
template <Symbol S>
std::vector<int> symbol_codes(const BasicWord<S>& w) {
    std::vector<int> codes;
    codes.reserve(w.raw().size());
    std::vector<S> seen;
    for (const S& s : w.raw()) {
        int code = -1;
        for (std::size_t d = 0; d < seen.size(); ++d) {
            if (seen[d] == s) {
                code = static_cast<int>(d);
                break;
            }
        }
        if (code < 0) {
            code = static_cast<int>(seen.size());
            seen.push_back(s);
        }
        codes.push_back(code);
    }
    return codes;
}

template <Symbol S>
int alphabet_size(const BasicWord<S>& w) {
    std::vector<S> seen;
    for (const S& s : w.raw()) {
        bool found = false;
        for (const S& t : seen) {
            if (t == s) {
                found = true;
                break;
            }
        }
        if (!found) seen.push_back(s);
    }
    return static_cast<int>(seen.size());
}

// Generator families used throughout the test corpus.
Word wk_word(int k);            // (01)^k (10)^k, length 4k
Word fibonacci_word(int len);   // prefix of the fixed point of 0 -> 01, 1 -> 0
Word thue_morse_word(int len);  // prefix of the Thue-Morse word over {0,1}
Word family_word(std::string_view family, long long param);

// All length-len words over {'0', ..., '0'+alphabet-1} in lexicographic order.
void for_each_word(int alphabet, int len, const std::function<void(const Word&)>& fn);
std::vector<Word> all_words(int alphabet, int len);

}  // namespace reps
