#pragma once

// Crossing counts of the match graph and the normalized curves behind the
// change-ratio estimator. For a cut j, c_lr[j] counts edges k -> T[k] with
// k < j <= T[k] and c_rl[j] counts edges with T[k] < j <= k. The normalized
// curves
//
//     psi_lr(j) = c_lr(j)/(n-j) - j/n
//     psi_rl(j) = c_rl(j)/j     - (n-j)/n
//     psi(j)    = max(psi_lr(j), psi_rl(j))
//
// are mean-centered against a uniform-target null. The change-ratio estimate
// is argmin of psi over j = 1..n-1 (j = 0 is excluded: psi_rl(0) is 0/0),
// ties broken toward the smallest j.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace creche {

struct CrossingCounts {
    std::vector<std::int64_t> c_lr; // index j = 0..n-1
    std::vector<std::int64_t> c_rl;
};

/// O(n) via range increments + prefix sums.
CrossingCounts count_crossings(std::span<const std::int32_t> targets);

struct CrossingCurves {
    std::int64_t n = 0;
    std::vector<std::int64_t> c_lr, c_rl;
    // psi arrays indexed by j; entries at j = 0 are +infinity placeholders
    // except psi_lr[0] which is a genuine 0.
    std::vector<double> psi_lr, psi_rl, psi;
};

CrossingCurves normalize(CrossingCounts counts);

/// count + normalize in one call.
CrossingCurves compute_crossing_curves(std::span<const std::int32_t> targets);

struct ChangePointEstimate {
    std::int64_t j_star = 0;
    double gamma_hat = 0.0;
    double psi_min = 0.0;
};

ChangePointEstimate creche_estimate(const CrossingCurves& curves);

/// Count/psi envelope violations over j = 1..n-1:
///   0 <= c_lr[j] <= j,            0 <= c_rl[j] <= n-j,
///   -j/n <= psi_lr[j] <= j^2/(n(n-j)),
///   -(n-j)/n <= psi_rl[j] <= (n-j)^2/(nj).
/// Returns the number of offending j (0 on every valid target array).
std::int64_t count_envelope_violations(const CrossingCurves& curves);

} // namespace creche
