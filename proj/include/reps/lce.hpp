// Constant-time longest-common-extension queries over integer codes, via a
// prefix-doubling suffix array, Kasai LCP and a sparse-table range minimum.
#pragma once

#include <span>
#include <vector>

namespace reps {

class LceIndex {
  public:
    explicit LceIndex(std::span<const int> codes);

    int size() const { return n_; }

    // Rank of the suffix starting at i; a proper prefix ranks below its
    // extensions (sentinel-smallest convention).
    int suffix_rank(int i) const { return rank_[static_cast<std::size_t>(i)]; }

    // Length of the longest common prefix of the suffixes at i and j
    // (0-based); 0 when either index lies outside the text.
    int lce(int i, int j) const;

  private:
    int n_ = 0;
    std::vector<int> sa_, rank_, lcp_, log2_;
    std::vector<std::vector<int>> sparse_;
};

}  // namespace reps
