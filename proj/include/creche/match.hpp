#pragma once

// Match-length machinery on a suffix array + LCP backbone.
//
// For a sequence x of length n, the match length L[i] is the length of the
// shortest window starting at i that occurs at no other position. A window
// running past the end of the sequence matches nothing (and is itself
// unique), so L[i] <= n - i + 1; equivalently
//
//     L[i] = 1 + max_{j != i} lcp(suffix_i, suffix_j).
//
// The match set S_i holds every position j != i whose window of length
// L[i]-1 equals the one at i; in suffix-array terms it is the maximal rank
// interval around rank(i) whose pairwise LCP is at least L[i]-1. When
// L[i] == 1 the matched window is empty and S_i is every position but i.
// Match targets T[i] are drawn uniformly from S_i, one independent draw
// per position.

#include <cstdint>
#include <vector>

#include "creche/rng.hpp"
#include "creche/sequence.hpp"

namespace creche {

class MatchProfile {
public:
    /// Builds suffix array, LCP array and match lengths. O(n log n) time,
    /// O(n) auxiliary space beyond the stored arrays. Requires n >= 2.
    explicit MatchProfile(const SymbolSequence& x);

    std::int64_t size() const { return n_; }
    const std::vector<std::int32_t>& match_lengths() const { return len_; }

    std::int64_t match_set_size(std::int64_t i) const;

    /// k-th element of S_i, 0 <= k < match_set_size(i). Enumeration order is
    /// an implementation detail; every element appears exactly once.
    std::int64_t match_set_member(std::int64_t i, std::int64_t k) const;

    /// S_i materialized in ascending position order (small inputs / tests).
    std::vector<std::int32_t> match_set(std::int64_t i) const;

    /// One uniform draw from each S_i. Deterministic given the rng state.
    std::vector<std::int32_t> sample_targets(Rng& rng) const;

    /// Match-length entropy estimate in bits/symbol: n*log2(n) / sum_i L[i].
    /// Requires n >= 16.
    double entropy_bits() const;

    const std::vector<std::int32_t>& suffix_array() const { return sa_; }
    const std::vector<std::int32_t>& lcp_array() const { return lcp_; }

private:
    std::int64_t n_;
    std::vector<std::int32_t> sa_;   // rank -> position
    std::vector<std::int32_t> rank_; // position -> rank
    std::vector<std::int32_t> lcp_;  // lcp_[r] = lcp(sa_[r-1], sa_[r]), lcp_[0] = 0
    std::vector<std::int32_t> len_;  // match lengths L
    std::vector<std::int32_t> rmq_;  // sparse table over lcp_, level-major
    int rmq_levels_ = 0;

    std::int32_t range_min_lcp(std::int32_t lo, std::int32_t hi) const; // min lcp_[lo..hi]
    // maximal rank interval [lo, hi] containing rank(i) with pairwise lcp >= ell
    std::pair<std::int32_t, std::int32_t> rank_interval(std::int64_t i) const;
};

std::vector<std::int32_t> sample_match_targets(const MatchProfile& profile, std::uint64_t seed);

double estimate_entropy(const MatchProfile& profile);

} // namespace creche
