#include "creche/match.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace creche {

namespace {

// Prefix-doubling suffix array with counting sort per round. The text gets a
// sentinel smaller than every symbol so that suffix order equals cyclic-shift
// order; the sentinel row is dropped before returning.
std::vector<std::int32_t> build_suffix_array(const std::vector<std::uint16_t>& text_in,
                                             std::uint32_t alphabet_size) {
    const std::int32_t n = static_cast<std::int32_t>(text_in.size()) + 1;
    std::vector<std::int32_t> text(n);
    for (std::int32_t i = 0; i + 1 < n; ++i) text[i] = static_cast<std::int32_t>(text_in[i]) + 1;
    text[n - 1] = 0; // sentinel

    const std::int32_t buckets = std::max<std::int32_t>(n, static_cast<std::int32_t>(alphabet_size) + 2);
    std::vector<std::int32_t> sa(n), rank(n), aux(n), count(buckets + 1);

    auto counting_sort = [&](const std::vector<std::int32_t>& key) {
        std::fill(count.begin(), count.end(), 0);
        for (std::int32_t i : aux) count[key[i] + 1] += 1;
        for (std::int32_t i = 1; i <= buckets; ++i) count[i] += count[i - 1];
        for (std::int32_t i : aux) sa[count[key[i]]++] = i;
    };

    std::iota(aux.begin(), aux.end(), 0);
    counting_sort(text);

    std::int32_t max_rank = 0;
    rank[sa[0]] = 0;
    for (std::int32_t i = 1; i < n; ++i) {
        max_rank += (text[sa[i - 1]] != text[sa[i]]);
        rank[sa[i]] = max_rank;
    }

    for (std::int32_t length = 1; max_rank != n - 1; length *= 2) {
        for (std::int32_t i = 0; i < n; ++i) {
            aux[i] = sa[i] - length;
            if (aux[i] < 0) aux[i] += n;
        }
        counting_sort(rank);

        auto second = [&](std::int32_t pos) {
            return pos + length < n ? rank[pos + length] : -1;
        };
        max_rank = 0;
        aux[sa[0]] = 0;
        for (std::int32_t i = 1; i < n; ++i) {
            if (rank[sa[i - 1]] != rank[sa[i]] || second(sa[i - 1]) != second(sa[i]))
                max_rank += 1;
            aux[sa[i]] = max_rank;
        }
        std::swap(aux, rank);
    }

    sa.erase(sa.begin()); // rank 0 is the sentinel suffix
    return sa;
}

// Kasai, linear rank-based scan.
std::vector<std::int32_t> build_lcp(const std::vector<std::uint16_t>& text,
                                    const std::vector<std::int32_t>& sa,
                                    std::vector<std::int32_t>& rank_out) {
    const std::int32_t n = static_cast<std::int32_t>(text.size());
    rank_out.assign(n, 0);
    for (std::int32_t r = 0; r < n; ++r) rank_out[sa[r]] = r;

    std::vector<std::int32_t> lcp(n, 0);
    std::int32_t k = 0;
    for (std::int32_t i = 0; i < n; ++i) {
        if (rank_out[i] == 0) {
            k = 0;
            continue;
        }
        const std::int32_t j = sa[rank_out[i] - 1];
        while (i + k < n && j + k < n && text[i + k] == text[j + k]) ++k;
        lcp[rank_out[i]] = k;
        if (k > 0) --k;
    }
    return lcp;
}

} // namespace

MatchProfile::MatchProfile(const SymbolSequence& x) : n_(x.size()) {
    if (n_ < 2) throw std::invalid_argument("MatchProfile: need at least 2 symbols");

    sa_ = build_suffix_array(x.symbols, x.alphabet_size);
    lcp_ = build_lcp(x.symbols, sa_, rank_);

    // L[i] = 1 + max lcp with any other suffix; the max is attained at a
    // suffix-array neighbor.
    len_.assign(static_cast<std::size_t>(n_), 0);
    const std::int32_t n = static_cast<std::int32_t>(n_);
    for (std::int32_t r = 0; r < n; ++r) {
        std::int32_t best = 0;
        if (r > 0) best = std::max(best, lcp_[r]);
        if (r + 1 < n) best = std::max(best, lcp_[r + 1]);
        len_[sa_[r]] = best + 1;
    }

    // Sparse table over lcp_ for the rank-interval queries.
    rmq_levels_ = n > 1 ? std::bit_width(static_cast<std::uint32_t>(n)) : 1;
    rmq_.assign(static_cast<std::size_t>(rmq_levels_) * n, 0);
    std::copy(lcp_.begin(), lcp_.end(), rmq_.begin());
    for (int lvl = 1; lvl < rmq_levels_; ++lvl) {
        const std::int32_t half = 1 << (lvl - 1);
        const std::int32_t span = 1 << lvl;
        for (std::int32_t i = 0; i + span <= n; ++i) {
            rmq_[static_cast<std::size_t>(lvl) * n + i] =
                std::min(rmq_[static_cast<std::size_t>(lvl - 1) * n + i],
                         rmq_[static_cast<std::size_t>(lvl - 1) * n + i + half]);
        }
    }
}

std::int32_t MatchProfile::range_min_lcp(std::int32_t lo, std::int32_t hi) const {
    const std::int32_t n = static_cast<std::int32_t>(n_);
    const int lvl = std::bit_width(static_cast<std::uint32_t>(hi - lo + 1)) - 1;
    return std::min(rmq_[static_cast<std::size_t>(lvl) * n + lo],
                    rmq_[static_cast<std::size_t>(lvl) * n + hi - (1 << lvl) + 1]);
}

std::pair<std::int32_t, std::int32_t> MatchProfile::rank_interval(std::int64_t i) const {
    const std::int32_t n = static_cast<std::int32_t>(n_);
    const std::int32_t r = rank_[static_cast<std::size_t>(i)];
    const std::int32_t ell = len_[static_cast<std::size_t>(i)] - 1;

    // Largest [lo, hi] containing r with lcp_[t] >= ell for all t in (lo, hi].
    std::int32_t lo = r;
    {
        std::int32_t a = 0, b = r; // lo candidate in [a, b]
        while (a < b) {
            const std::int32_t mid = a + (b - a) / 2;
            if (range_min_lcp(mid + 1, r) >= ell)
                b = mid;
            else
                a = mid + 1;
        }
        lo = a;
    }
    std::int32_t hi = r;
    {
        std::int32_t a = r, b = n - 1;
        while (a < b) {
            const std::int32_t mid = a + (b - a + 1) / 2;
            if (range_min_lcp(r + 1, mid) >= ell)
                a = mid;
            else
                b = mid - 1;
        }
        hi = a;
    }
    return {lo, hi};
}

std::int64_t MatchProfile::match_set_size(std::int64_t i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("match_set_size: index out of range");
    if (len_[static_cast<std::size_t>(i)] == 1) return n_ - 1;
    const auto [lo, hi] = rank_interval(i);
    return static_cast<std::int64_t>(hi - lo); // interval minus the suffix itself
}

std::int64_t MatchProfile::match_set_member(std::int64_t i, std::int64_t k) const {
    if (i < 0 || i >= n_) throw std::out_of_range("match_set_member: index out of range");
    if (len_[static_cast<std::size_t>(i)] == 1) {
        // every position except i, in position order
        return k < i ? k : k + 1;
    }
    const auto [lo, hi] = rank_interval(i);
    if (k < 0 || k >= hi - lo) throw std::out_of_range("match_set_member: k out of range");
    const std::int32_t r = rank_[static_cast<std::size_t>(i)];
    std::int32_t pick = lo + static_cast<std::int32_t>(k);
    if (pick >= r) ++pick;
    return sa_[pick];
}

std::vector<std::int32_t> MatchProfile::match_set(std::int64_t i) const {
    const std::int64_t m = match_set_size(i);
    std::vector<std::int32_t> out;
    out.reserve(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k)
        out.push_back(static_cast<std::int32_t>(match_set_member(i, k)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int32_t> MatchProfile::sample_targets(Rng& rng) const {
    std::vector<std::int32_t> targets(static_cast<std::size_t>(n_));
    for (std::int64_t i = 0; i < n_; ++i) {
        const std::int64_t m = match_set_size(i);
        const std::int64_t k = m == 1 ? 0 : static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(m)));
        targets[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(match_set_member(i, k));
    }
    return targets;
}

double MatchProfile::entropy_bits() const {
    if (n_ < 16) throw std::invalid_argument("entropy_bits: need at least 16 symbols");
    double total = 0.0;
    for (std::int32_t l : len_) total += l;
    return static_cast<double>(n_) * std::log2(static_cast<double>(n_)) / total;
}

std::vector<std::int32_t> sample_match_targets(const MatchProfile& profile, std::uint64_t seed) {
    Rng rng(seed);
    return profile.sample_targets(rng);
}

double estimate_entropy(const MatchProfile& profile) { return profile.entropy_bits(); }

} // namespace creche
