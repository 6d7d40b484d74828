#include "reps/lce.hpp"

#include <algorithm>
#include <numeric>

namespace reps {

LceIndex::LceIndex(std::span<const int> codes) : n_(static_cast<int>(codes.size())) {
    sa_.resize(static_cast<std::size_t>(n_));
    rank_.resize(static_cast<std::size_t>(n_));
    if (n_ == 0) return;
    std::iota(sa_.begin(), sa_.end(), 0);
    for (int i = 0; i < n_; ++i) rank_[static_cast<std::size_t>(i)] = codes[static_cast<std::size_t>(i)];

    std::vector<int> next(static_cast<std::size_t>(n_));
    for (int k = 1;; k <<= 1) {
        auto cmp = [&](int a, int b) {
            if (rank_[static_cast<std::size_t>(a)] != rank_[static_cast<std::size_t>(b)])
                return rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)];
            int ra = a + k < n_ ? rank_[static_cast<std::size_t>(a + k)] : -1;
            int rb = b + k < n_ ? rank_[static_cast<std::size_t>(b + k)] : -1;
            return ra < rb;
        };
        std::sort(sa_.begin(), sa_.end(), cmp);
        next[static_cast<std::size_t>(sa_[0])] = 0;
        for (int i = 1; i < n_; ++i)
            next[static_cast<std::size_t>(sa_[static_cast<std::size_t>(i)])] =
                next[static_cast<std::size_t>(sa_[static_cast<std::size_t>(i - 1)])] +
                (cmp(sa_[static_cast<std::size_t>(i - 1)], sa_[static_cast<std::size_t>(i)]) ? 1 : 0);
        rank_ = next;
        if (rank_[static_cast<std::size_t>(sa_[static_cast<std::size_t>(n_ - 1)])] == n_ - 1) break;
    }

    // Kasai's LCP construction: lcp_[r] = lce(sa_[r-1], sa_[r]).
    lcp_.assign(static_cast<std::size_t>(n_), 0);
    int h = 0;
    for (int i = 0; i < n_; ++i) {
        const int r = rank_[static_cast<std::size_t>(i)];
        if (r == 0) {
            h = 0;
            continue;
        }
        const int j = sa_[static_cast<std::size_t>(r - 1)];
        while (i + h < n_ && j + h < n_ &&
               codes[static_cast<std::size_t>(i + h)] == codes[static_cast<std::size_t>(j + h)])
            ++h;
        lcp_[static_cast<std::size_t>(r)] = h;
        if (h > 0) --h;
    }

    log2_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int i = 2; i <= n_; ++i) log2_[static_cast<std::size_t>(i)] = log2_[static_cast<std::size_t>(i / 2)] + 1;
    const int levels = log2_[static_cast<std::size_t>(n_)] + 1;
    sparse_.assign(static_cast<std::size_t>(levels), lcp_);
    for (int l = 1; l < levels; ++l)
        for (int i = 0; i + (1 << l) <= n_; ++i)
            sparse_[static_cast<std::size_t>(l)][static_cast<std::size_t>(i)] =
                std::min(sparse_[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i)],
                         sparse_[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i + (1 << (l - 1)))]);
}

int LceIndex::lce(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) return 0;
    if (i == j) return n_ - i;
    int ri = rank_[static_cast<std::size_t>(i)];
    int rj = rank_[static_cast<std::size_t>(j)];
    if (ri > rj) std::swap(ri, rj);
    const int lo = ri + 1, hi = rj;  // min over lcp_[lo..hi]
    const int l = log2_[static_cast<std::size_t>(hi - lo + 1)];
    return std::min(sparse_[static_cast<std::size_t>(l)][static_cast<std::size_t>(lo)],
                    sparse_[static_cast<std::size_t>(l)][static_cast<std::size_t>(hi - (1 << l) + 1)]);
}

}  // namespace reps
