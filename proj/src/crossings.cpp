#include "creche/crossings.hpp"

#include <limits>
#include <stdexcept>

namespace creche {

CrossingCounts count_crossings(std::span<const std::int32_t> targets) {
    const std::int64_t n = static_cast<std::int64_t>(targets.size());
    if (n < 2) throw std::invalid_argument("count_crossings: need at least 2 targets");

    // Edge k -> T[k] crosses j left-to-right for every j in [k+1, T[k]] and
    // right-to-left for every j in [T[k]+1, k]; self-loops cross nothing.
    std::vector<std::int64_t> d_lr(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> d_rl(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t t = targets[static_cast<std::size_t>(k)];
        if (t < 0 || t >= n) throw std::invalid_argument("count_crossings: target out of range");
        if (t > k) {
            d_lr[static_cast<std::size_t>(k) + 1] += 1;
            d_lr[static_cast<std::size_t>(t) + 1] -= 1;
        } else if (t < k) {
            d_rl[static_cast<std::size_t>(t) + 1] += 1;
            d_rl[static_cast<std::size_t>(k) + 1] -= 1;
        }
    }

    CrossingCounts counts;
    counts.c_lr.assign(static_cast<std::size_t>(n), 0);
    counts.c_rl.assign(static_cast<std::size_t>(n), 0);
    std::int64_t acc_lr = 0, acc_rl = 0;
    for (std::int64_t j = 0; j < n; ++j) {
        acc_lr += d_lr[static_cast<std::size_t>(j)];
        acc_rl += d_rl[static_cast<std::size_t>(j)];
        counts.c_lr[static_cast<std::size_t>(j)] = acc_lr;
        counts.c_rl[static_cast<std::size_t>(j)] = acc_rl;
    }
    return counts;
}

CrossingCurves normalize(CrossingCounts counts) {
    const std::int64_t n = static_cast<std::int64_t>(counts.c_lr.size());
    if (n < 2 || counts.c_rl.size() != counts.c_lr.size())
        throw std::invalid_argument("normalize: invalid counts");

    CrossingCurves curves;
    curves.n = n;
    curves.c_lr = std::move(counts.c_lr);
    curves.c_rl = std::move(counts.c_rl);
    curves.psi_lr.assign(static_cast<std::size_t>(n), 0.0);
    curves.psi_rl.assign(static_cast<std::size_t>(n), 0.0);
    curves.psi.assign(static_cast<std::size_t>(n), 0.0);

    const double nd = static_cast<double>(n);
    const double inf = std::numeric_limits<double>::infinity();
    curves.psi_lr[0] = 0.0; // c_lr[0] == 0 always
    curves.psi_rl[0] = inf;
    curves.psi[0] = inf;
    for (std::int64_t j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        const double lr = static_cast<double>(curves.c_lr[static_cast<std::size_t>(j)]) / (nd - jd) - jd / nd;
        const double rl = static_cast<double>(curves.c_rl[static_cast<std::size_t>(j)]) / jd - (nd - jd) / nd;
        curves.psi_lr[static_cast<std::size_t>(j)] = lr;
        curves.psi_rl[static_cast<std::size_t>(j)] = rl;
        curves.psi[static_cast<std::size_t>(j)] = lr > rl ? lr : rl;
    }
    return curves;
}

CrossingCurves compute_crossing_curves(std::span<const std::int32_t> targets) {
    return normalize(count_crossings(targets));
}

ChangePointEstimate creche_estimate(const CrossingCurves& curves) {
    const std::int64_t n = curves.n;
    if (n < 2) throw std::invalid_argument("creche_estimate: invalid curves");
    std::int64_t j_star = 1;
    double best = curves.psi[1];
    for (std::int64_t j = 2; j < n; ++j) {
        const double v = curves.psi[static_cast<std::size_t>(j)];
        if (v < best) {
            best = v;
            j_star = j;
        }
    }
    return ChangePointEstimate{j_star, static_cast<double>(j_star) / static_cast<double>(n), best};
}

std::int64_t count_envelope_violations(const CrossingCurves& curves) {
    const std::int64_t n = curves.n;
    const double nd = static_cast<double>(n);
    const double eps = 1e-12;
    std::int64_t bad = 0;
    for (std::int64_t j = 1; j < n; ++j) {
        const std::size_t u = static_cast<std::size_t>(j);
        const double jd = static_cast<double>(j);
        bool ok = curves.c_lr[u] >= 0 && curves.c_lr[u] <= j;
        ok = ok && curves.c_rl[u] >= 0 && curves.c_rl[u] <= n - j;
        ok = ok && curves.psi_lr[u] >= -jd / nd - eps &&
             curves.psi_lr[u] <= jd * jd / (nd * (nd - jd)) + eps;
        ok = ok && curves.psi_rl[u] >= -(nd - jd) / nd - eps &&
             curves.psi_rl[u] <= (nd - jd) * (nd - jd) / (nd * jd) + eps;
        if (!ok) ++bad;
    }
    return bad;
}

} // namespace creche
