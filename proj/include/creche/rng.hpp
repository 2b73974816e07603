#pragma once

// Seedable, reproducible random number generation for all samplers and
// Monte Carlo drivers. xoshiro256** core seeded through splitmix64, so a
// 64-bit seed always expands to a full-entropy state. Trial streams are
// derived from (master seed, trial index) and are independent of the
// order in which trials execute.

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace creche {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = detail::splitmix64(s);
    }

    /// Stream for one trial of a multi-trial experiment. Streams for
    /// distinct trial indices are statistically independent, so trials can
    /// run in any order (or concurrently) without changing results.
    static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial) {
        std::uint64_t s = master_seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1));
        return Rng(detail::splitmix64(s));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Unbiased uniform integer in [0, bound). Lemire multiply-shift with
    /// rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        std::uint64_t x = next_u64();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<unsigned __int128>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    bool bernoulli(double p) { return next_double() < p; }

    /// Binomial(n, p) by CDF inversion; intended for the small n used by
    /// the thinning process (n up to a few thousand).
    std::int64_t binomial(std::int64_t n, double p) {
        if (n < 0) throw std::invalid_argument("Rng::binomial: n must be >= 0");
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("Rng::binomial: p outside [0,1]");
        if (n == 0 || p == 0.0) return 0;
        if (p == 1.0) return n;
        if (p > 0.5) return n - binomial(n, 1.0 - p);
        const double odds = p / (1.0 - p);
        double pk = std::pow(1.0 - p, static_cast<double>(n));
        double cum = pk;
        const double u = next_double();
        std::int64_t k = 0;
        while (u > cum && k < n) {
            ++k;
            pk *= odds * static_cast<double>(n - k + 1) / static_cast<double>(k);
            cum += pk;
        }
        return k;
    }

    /// Index sampled from a categorical distribution given by `probs`
    /// (assumed normalized; trailing mass absorbs rounding).
    std::size_t categorical(std::span<const double> probs) {
        const double u = next_double();
        double cum = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            cum += probs[i];
            if (u < cum) return i;
        }
        return probs.size() - 1;
    }

private:
    std::array<std::uint64_t, 4> state_{};
};

} // namespace creche
