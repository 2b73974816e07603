#pragma once

// Piecewise-uniform toy model for match targets and its closed-form theory.
//
// Targets are drawn independently from two-level row distributions: a source
// position left of the change index lands uniformly on the left block, or on
// the right block with relative weight alpha_l (and symmetrically on the
// right). The theory side provides the exact mean curves of psi_lr/psi_rl,
// the variances of the martingale transforms z_lr/z_rl built from them, the
// exact binomial moments of the crossing counts, the binomial-thinning
// integer autoregression underlying those martingales, and the constant K of
// the sqrt(n)-consistency bound P(|gamma_hat - gamma| >= s/sqrt(n)) <= K/s^2.

#include <cstdint>
#include <vector>

#include "creche/crossings.hpp"
#include "creche/rng.hpp"

namespace creche {

struct ModelBParams {
    std::int64_t n = 0;
    double gamma = 0.0;
    double alpha_l = 0.0;
    double alpha_r = 0.0;

    double delta_l() const { return gamma + (1.0 - gamma) * alpha_l; }
    double delta_r() const { return gamma * alpha_r + (1.0 - gamma); }

    /// Change index c = round(n * gamma), ties rounded up.
    std::int64_t change_index() const;

    /// Throws std::invalid_argument on degenerate parameters.
    void validate() const;
};

/// One draw of all n targets. Self-loops are allowed.
std::vector<std::int32_t> sample_model_b(const ModelBParams& params, Rng& rng);

/// Closed-form curves; formulas are evaluated at the real n*gamma, so the
/// +-0.5 discretization of the change index is absorbed by the caller's
/// tolerances.
class TheoryCurves {
public:
    explicit TheoryCurves(const ModelBParams& params);

    double mean_lr_1(double j) const; // concave branch, j <= n*gamma
    double mean_lr_2(double j) const; // linear branch, j >= n*gamma
    double mean_rl_1(double j) const; // linear branch, j <= n*gamma
    double mean_rl_2(double j) const; // concave branch, j >= n*gamma

    double mean_lr(double j) const; // piecewise at n*gamma
    double mean_rl(double j) const;

    double var_z_lr(double j) const;
    /// Defined for j >= n*gamma (the transform is a time-reversed martingale
    /// on that side); NaN below.
    double var_z_rl(double j) const;

    double d_min_lr() const;
    double d_min_rl() const;

    // Exact first/second moments of the crossing counts under the sampler.
    double c_lr_mean(double j) const;
    double c_lr_var(double j) const;
    double c_rl_mean(double j) const;
    double c_rl_var(double j) const;

private:
    std::int64_t n_;
    double g_, al_, ar_, dl_, dr_;
    void require_range(double j) const;
};

/// Martingale transform of psi_lr: centred by the mean curves and, left of
/// the change index, rescaled by (n-j)/(n*delta_l - j). Entry 0 is unused.
std::vector<double> z_transform_lr(const CrossingCurves& curves, const ModelBParams& params);

/// Time-reversed counterpart for psi_rl, rescaled right of the change index
/// by j/(j - n*gamma*(1-alpha_r)). Entry 0 is unused.
std::vector<double> z_transform_rl(const CrossingCurves& curves, const ModelBParams& params);

/// Binomial-thinning INAR(1) path: Y_0 = 0 and
///   Y_{j+1} = ((N-j-1)/(N-j)) o Y_j + Bernoulli(beta*(N-j-1)/N),
/// which keeps Y_j ~ Bin(j, beta*(N-j)/N) for every j. Returns Y_0..Y_steps.
std::vector<std::int32_t> simulate_inar(std::int32_t N, double beta, std::int32_t steps, Rng& rng);

/// The constant K of the consistency bound. Applies the L/R, gamma -> 1-gamma
/// reflection first when d_min_lr < d_min_rl. Returns +infinity in the
/// degenerate limits (alpha_l -> 0 or 1).
double consistency_k(const ModelBParams& params);

/// min(1, K/s^2).
double consistency_bound(const ModelBParams& params, double s);

} // namespace creche
