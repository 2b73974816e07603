#include "creche/modelb.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace creche {

std::int64_t ModelBParams::change_index() const {
    return static_cast<std::int64_t>(std::floor(static_cast<double>(n) * gamma + 0.5));
}

void ModelBParams::validate() const {
    if (n < 2) throw std::invalid_argument("ModelBParams: n must be >= 2");
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("ModelBParams: gamma must lie in (0,1)");
    if (!(alpha_l >= 0.0 && alpha_l <= 1.0) || !(alpha_r >= 0.0 && alpha_r <= 1.0))
        throw std::invalid_argument("ModelBParams: alphas must lie in [0,1]");
    const double nd = static_cast<double>(n);
    if (nd * gamma < 1.0 || nd * (1.0 - gamma) < 1.0)
        throw std::invalid_argument("ModelBParams: degenerate split (n*gamma or n*(1-gamma) < 1)");
    const std::int64_t c = change_index();
    if (c < 1 || c > n - 1)
        throw std::invalid_argument("ModelBParams: change index outside 1..n-1");
}

std::vector<std::int32_t> sample_model_b(const ModelBParams& params, Rng& rng) {
    params.validate();
    const std::int64_t n = params.n;
    const std::int64_t c = params.change_index();
    const double left_cells = static_cast<double>(c);
    const double right_cells = static_cast<double>(n - c);

    // Exact row normalization in terms of the integer change index, so each
    // row is a proper distribution even when n*gamma is fractional.
    const double p_left_given_left = left_cells / (left_cells + params.alpha_l * right_cells);
    const double p_left_given_right =
        params.alpha_r * left_cells / (params.alpha_r * left_cells + right_cells);

    std::vector<std::int32_t> targets(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        const double p_left = i < c ? p_left_given_left : p_left_given_right;
        std::int64_t t;
        if (rng.bernoulli(p_left))
            t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(c)));
        else
            t = c + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n - c)));
        targets[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(t);
    }
    return targets;
}

TheoryCurves::TheoryCurves(const ModelBParams& params)
    : n_(params.n), g_(params.gamma), al_(params.alpha_l), ar_(params.alpha_r),
      dl_(params.delta_l()), dr_(params.delta_r()) {
    params.validate();
}

void TheoryCurves::require_range(double j) const {
    if (!(j >= 1.0 && j <= static_cast<double>(n_ - 1)))
        throw std::invalid_argument("TheoryCurves: j outside 1..n-1");
}

double TheoryCurves::mean_lr_1(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    return -(j * j) / (n * (n - j)) * ((1.0 - g_) * (1.0 - al_) / dl_);
}

double TheoryCurves::mean_lr_2(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    return g_ * al_ / dl_ - g_ / dr_ + (j / n) * (g_ * (1.0 - ar_) / dr_);
}

double TheoryCurves::mean_rl_1(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    return (1.0 - g_) * ar_ / dr_ - (1.0 - g_) / dl_ +
           ((n - j) / n) * ((1.0 - g_) * (1.0 - al_) / dl_);
}

double TheoryCurves::mean_rl_2(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    return -((n - j) * (n - j)) / (n * j) * (g_ * (1.0 - ar_) / dr_);
}

double TheoryCurves::mean_lr(double j) const {
    return j < static_cast<double>(n_) * g_ ? mean_lr_1(j) : mean_lr_2(j);
}

double TheoryCurves::mean_rl(double j) const {
    return j < static_cast<double>(n_) * g_ ? mean_rl_1(j) : mean_rl_2(j);
}

double TheoryCurves::var_z_lr(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    if (j < n * g_) {
        return (j * j) / (n * n * dl_ * dl_ * (n * dl_ - j));
    }
    const double first = al_ * g_ * (al_ * j + g_ * (1.0 - al_) * n) / (dl_ * dl_ * n * (n - j));
    const double second =
        (j - g_ * n) * (j - (1.0 - ar_) * g_ * n) / (dr_ * dr_ * n * n * (n - j));
    return first + second;
}

double TheoryCurves::var_z_rl(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    if (j < n * g_) return std::numeric_limits<double>::quiet_NaN();
    return ((n - j) * (n - j)) / (n * n * dr_ * dr_ * (j - n * g_ * (1.0 - ar_)));
}

double TheoryCurves::d_min_lr() const { return -g_ * g_ * (1.0 - al_) / dl_; }

double TheoryCurves::d_min_rl() const { return -(1.0 - g_) * (1.0 - g_) * (1.0 - ar_) / dr_; }

double TheoryCurves::c_lr_mean(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    if (j <= n * g_) {
        const double p = (n * dl_ - j) / (n * dl_);
        return j * p;
    }
    const double mean1 = n * g_ * ((n - j) * al_ / (n * dl_));
    const double mean2 = (j - n * g_) * ((n - j) / (n * dr_));
    return mean1 + mean2;
}

double TheoryCurves::c_lr_var(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    if (j <= n * g_) {
        const double p = (n * dl_ - j) / (n * dl_);
        return j * p * (1.0 - p);
    }
    const double p1 = (n - j) * al_ / (n * dl_);
    const double p2 = (n - j) / (n * dr_);
    return n * g_ * p1 * (1.0 - p1) + (j - n * g_) * p2 * (1.0 - p2);
}

double TheoryCurves::c_rl_mean(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    if (j >= n * g_) {
        const double p = (n * dr_ - (n - j)) / (n * dr_);
        return (n - j) * p;
    }
    const double mean1 = n * (1.0 - g_) * (j * ar_ / (n * dr_));
    const double mean2 = (n * g_ - j) * (j / (n * dl_));
    return mean1 + mean2;
}

double TheoryCurves::c_rl_var(double j) const {
    require_range(j);
    const double n = static_cast<double>(n_);
    if (j >= n * g_) {
        const double p = (n * dr_ - (n - j)) / (n * dr_);
        return (n - j) * p * (1.0 - p);
    }
    const double p1 = j * ar_ / (n * dr_);
    const double p2 = j / (n * dl_);
    return n * (1.0 - g_) * p1 * (1.0 - p1) + (n * g_ - j) * p2 * (1.0 - p2);
}

std::vector<double> z_transform_lr(const CrossingCurves& curves, const ModelBParams& params) {
    params.validate();
    if (curves.n != params.n) throw std::invalid_argument("z_transform_lr: size mismatch");
    const TheoryCurves theory(params);
    const std::int64_t n = params.n;
    const std::int64_t c = params.change_index();
    const double nd = static_cast<double>(n);
    const double ndl = nd * params.delta_l();

    std::vector<double> z(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        const double psi = curves.psi_lr[static_cast<std::size_t>(j)];
        if (j < c)
            z[static_cast<std::size_t>(j)] = ((nd - jd) / (ndl - jd)) * (psi - theory.mean_lr_1(jd));
        else
            z[static_cast<std::size_t>(j)] = psi - theory.mean_lr_2(jd);
    }
    return z;
}

std::vector<double> z_transform_rl(const CrossingCurves& curves, const ModelBParams& params) {
    params.validate();
    if (curves.n != params.n) throw std::invalid_argument("z_transform_rl: size mismatch");
    const TheoryCurves theory(params);
    const std::int64_t n = params.n;
    const std::int64_t c = params.change_index();
    const double nd = static_cast<double>(n);
    const double pivot = nd * params.gamma * (1.0 - params.alpha_r);

    std::vector<double> z(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        const double psi = curves.psi_rl[static_cast<std::size_t>(j)];
        if (j < c)
            z[static_cast<std::size_t>(j)] = psi - theory.mean_rl_1(jd);
        else
            z[static_cast<std::size_t>(j)] = (jd / (jd - pivot)) * (psi - theory.mean_rl_2(jd));
    }
    return z;
}

std::vector<std::int32_t> simulate_inar(std::int32_t N, double beta, std::int32_t steps, Rng& rng) {
    if (N < 1) throw std::invalid_argument("simulate_inar: N must be >= 1");
    if (!(beta > 0.0 && beta <= 1.0))
        throw std::invalid_argument("simulate_inar: beta must lie in (0,1]");
    if (steps < 0 || steps >= N)
        throw std::invalid_argument("simulate_inar: steps must lie in 0..N-1");

    std::vector<std::int32_t> path(static_cast<std::size_t>(steps) + 1, 0);
    std::int64_t y = 0;
    for (std::int32_t j = 0; j < steps; ++j) {
        const double drop = 1.0 / static_cast<double>(N - j); // 1 - (N-j-1)/(N-j)
        y -= rng.binomial(y, drop);
        if (rng.bernoulli(beta * static_cast<double>(N - j - 1) / static_cast<double>(N))) ++y;
        path[static_cast<std::size_t>(j) + 1] = static_cast<std::int32_t>(y);
    }
    return path;
}

double consistency_k(const ModelBParams& params) {
    params.validate();
    ModelBParams p = params;
    {
        const TheoryCurves t(params);
        if (t.d_min_lr() < t.d_min_rl()) {
            p.gamma = 1.0 - params.gamma;
            p.alpha_l = params.alpha_r;
            p.alpha_r = params.alpha_l;
        }
    }
    const double g = p.gamma, al = p.alpha_l, ar = p.alpha_r;
    const double dl = p.delta_l(), dr = p.delta_r();
    if (al >= 1.0 || al <= 0.0) return std::numeric_limits<double>::infinity();

    const double term1 =
        (al / (1.0 - g) + ar / (1.0 - g)) * (dl * dl) / (std::pow(g, 6) * (1.0 - al) * (1.0 - al));
    const double num2 = al + g * g * (1.0 - al) * (1.0 - g);
    const double term2 = (num2 * num2) / (al * std::pow(1.0 - g * g, 2) * std::pow(1.0 - g, 3) *
                                          (1.0 - al) * (1.0 - al));
    const double term3 = ((g + al) / (g * g * (1.0 - al) * (1.0 - g * (1.0 - g)))) *
                         (dr * dr) / (g * g * (1.0 - ar) * (1.0 - ar) *
                                      std::pow(1.0 - (1.0 - g) * (1.0 - g), 2));
    return term1 + term2 + term3;
}

double consistency_bound(const ModelBParams& params, double s) {
    const double k = consistency_k(params);
    if (!(s > 0.0)) return 1.0;
    return std::min(1.0, k / (s * s));
}

} // namespace creche
