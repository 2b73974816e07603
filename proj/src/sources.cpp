#include "creche/sources.hpp"

#include <cmath>
#include <stdexcept>

namespace creche {

namespace {

void check_probability_vector(const std::vector<double>& p, const char* what) {
    if (p.empty()) throw std::invalid_argument(std::string(what) + ": empty probability vector");
    double sum = 0.0;
    for (double x : p) {
        if (!(x >= 0.0)) throw std::invalid_argument(std::string(what) + ": negative entry");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument(std::string(what) + ": probabilities do not sum to 1");
}

} // namespace

IidSource::IidSource(std::vector<double> p) : probs(std::move(p)) {
    check_probability_vector(probs, "IidSource");
    if (probs.size() > 65536) throw std::invalid_argument("IidSource: alphabet too large");
}

MarkovSource::MarkovSource(std::vector<std::vector<double>> t, std::vector<double> init)
    : transition(std::move(t)), initial(std::move(init)) {
    if (transition.empty()) throw std::invalid_argument("MarkovSource: empty transition matrix");
    const std::size_t k = transition.size();
    if (k > 65536) throw std::invalid_argument("MarkovSource: alphabet too large");
    for (const auto& row : transition) {
        if (row.size() != k) throw std::invalid_argument("MarkovSource: transition matrix not square");
        check_probability_vector(row, "MarkovSource row");
    }
    if (!initial.empty()) {
        if (initial.size() != k)
            throw std::invalid_argument("MarkovSource: initial vector has wrong dimension");
        check_probability_vector(initial, "MarkovSource initial");
    }
}

SymbolSequence sample_iid(const IidSource& src, std::int64_t n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_iid: n must be >= 1");
    std::vector<std::uint16_t> out(static_cast<std::size_t>(n));
    for (auto& s : out) s = static_cast<std::uint16_t>(rng.categorical(src.probs));
    return SymbolSequence{std::move(out), static_cast<std::uint32_t>(src.probs.size())};
}

SymbolSequence sample_markov(const MarkovSource& src, std::int64_t n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_markov: n must be >= 1");
    const std::vector<double>& init =
        src.initial.empty() ? stationary_distribution(src) : src.initial;
    std::vector<std::uint16_t> out(static_cast<std::size_t>(n));
    std::size_t state = rng.categorical(init);
    out[0] = static_cast<std::uint16_t>(state);
    for (std::int64_t i = 1; i < n; ++i) {
        state = rng.categorical(src.transition[state]);
        out[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(state);
    }
    return SymbolSequence{std::move(out), static_cast<std::uint32_t>(src.transition.size())};
}

std::vector<double> stationary_distribution(const MarkovSource& src, int max_iters, double tol) {
    const std::size_t k = src.transition.size();
    std::vector<double> pi(k, 1.0 / static_cast<double>(k));
    std::vector<double> next(k);
    for (int iter = 0; iter < max_iters; ++iter) {
        for (std::size_t j = 0; j < k; ++j) {
            double acc = 0.0;
            for (std::size_t i = 0; i < k; ++i) acc += pi[i] * src.transition[i][j];
            next[j] = acc;
        }
        double norm = 0.0;
        for (double x : next) norm += x;
        double diff = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            next[j] /= norm;
            diff = std::max(diff, std::abs(next[j] - pi[j]));
        }
        pi.swap(next);
        if (diff < tol) return pi;
    }
    throw std::runtime_error("stationary_distribution: power iteration did not converge");
}

} // namespace creche
