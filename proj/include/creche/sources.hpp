#pragma once

// Synthetic sequence generators: IID categorical sources and first-order
// Markov chains, plus the stationary distribution solver used to start
// chains in equilibrium.

#include <cstdint>
#include <vector>

#include "creche/rng.hpp"
#include "creche/sequence.hpp"

namespace creche {

struct IidSource {
    std::vector<double> probs;

    explicit IidSource(std::vector<double> probs);
};

struct MarkovSource {
    std::vector<std::vector<double>> transition; // row-stochastic
    std::vector<double> initial;                 // empty => stationary start

    explicit MarkovSource(std::vector<std::vector<double>> transition,
                          std::vector<double> initial = {});
};

SymbolSequence sample_iid(const IidSource& src, std::int64_t n, Rng& rng);
SymbolSequence sample_markov(const MarkovSource& src, std::int64_t n, Rng& rng);

/// Fixed point pi of pi * P = pi by power iteration. Throws if the iteration
/// has not converged after max_iters sweeps (reducible or periodic chains).
std::vector<double> stationary_distribution(const MarkovSource& src,
                                            int max_iters = 100000,
                                            double tol = 1e-14);

} // namespace creche
