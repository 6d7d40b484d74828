// Periods, exponents, primitivity and primitive squares of factors.
#pragma once

#include "reps/rational.hpp"
#include "reps/word.hpp"

#include <optional>
#include <vector>

namespace reps {

// p is a period of f iff f[x] == f[x+p] whenever both positions are inside f.
// Vacuously true when p >= length(f).
template <Symbol S>
bool has_period(const BasicWord<S>& w, Factor f, int p) {
    require_factor(w, f);
    if (p < 1) throw std::invalid_argument("period must be positive");
    for (int x = f.start; x + p <= f.end; ++x)
        if (!(w.at(x) == w.at(x + p))) return false;
    return true;
}

// Smallest period, via the border identity: minimal period = length - longest
// proper border.
template <Symbol S>
int minimal_period(const BasicWord<S>& w, Factor f) {
    require_factor(w, f);
    const int len = f.length();
    std::vector<int> border(static_cast<std::size_t>(len) + 1);
    border[0] = -1;
    for (int k = 1; k <= len; ++k) {
        int b = border[static_cast<std::size_t>(k - 1)];
        while (b >= 0 && !(w.at(f.start + b) == w.at(f.start + k - 1)))
            b = border[static_cast<std::size_t>(b)];
        border[static_cast<std::size_t>(k)] = b + 1;
    }
    return len - border[static_cast<std::size_t>(len)];
}

// exponent(f) = length / minimal period, as an exact rational.
template <Symbol S>
Rational exponent(const BasicWord<S>& w, Factor f) {
    return Rational(f.length(), minimal_period(w, f));
}

// A word is primitive iff its exponent is not an integer >= 2.
template <Symbol S>
bool is_primitive(const BasicWord<S>& w, Factor f) {
    const int len = f.length();
    const int p = minimal_period(w, f);
    return !(len % p == 0 && len / p >= 2);
}

// Periodicity lemma: periods p and q of a word of length >= p + q imply the
// period gcd(p, q); absent when the length premise fails.
std::optional<int> implied_gcd_period(int len, int p, int q);

struct PrimitiveSquare {
    int start = 0;   // l: the square occupies [l .. l+2q-1]
    int period = 0;  // q: root length

    friend bool operator==(const PrimitiveSquare&, const PrimitiveSquare&) = default;
    friend auto operator<=>(const PrimitiveSquare&, const PrimitiveSquare&) = default;
};

// All occurrences (l, q) of squares uu with primitive root u, sorted by (l, q).
template <Symbol S>
std::vector<PrimitiveSquare> enumerate_primitive_squares(const BasicWord<S>& w) {
    std::vector<PrimitiveSquare> out;
    const int n = w.size();
    for (int l = 1; l <= n; ++l)
        for (int q = 1; l + 2 * q - 1 <= n; ++q) {
            bool eq = true;
            for (int x = 0; x < q && eq; ++x) eq = w.at(l + x) == w.at(l + q + x);
            if (eq && is_primitive(w, Factor{l, l + q - 1}))
                out.push_back(PrimitiveSquare{l, q});
        }
    return out;
}

// Minimal period of every factor of one word, O(n^2) time and space: one
// incremental border pass per start position. Bulk companion to
// minimal_period for whole-word sweeps.
class PeriodTable {
  public:
    template <Symbol S>
    explicit PeriodTable(const BasicWord<S>& w) : n_(w.size()) {
        if (n_ > 4096) throw std::invalid_argument("PeriodTable limited to n <= 4096");
        mp_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
        std::vector<int> border(static_cast<std::size_t>(n_) + 1);
        for (int i = 1; i <= n_; ++i) {
            border[0] = -1;
            for (int k = 1; k <= n_ - i + 1; ++k) {
                int b = border[static_cast<std::size_t>(k - 1)];
                while (b >= 0 && !(w.at(i + b) == w.at(i + k - 1)))
                    b = border[static_cast<std::size_t>(b)];
                border[static_cast<std::size_t>(k)] = b + 1;
                mp_[idx(i, i + k - 1)] = k - (b + 1);
            }
        }
    }

    int size() const { return n_; }

    int min_period(int i, int j) const {
        assert(1 <= i && i <= j && j <= n_);
        return mp_[idx(i, j)];
    }

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j - 1);
    }

    int n_;
    std::vector<int> mp_;
};

}  // namespace reps
