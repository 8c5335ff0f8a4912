#include "gancc/density_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gancc::de {

namespace {

inline double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

} // namespace

double psi_exact(double mu) {
    if (mu < 0) throw std::invalid_argument("psi_exact: mu must be >= 0");
    if (mu == 0) return 0.0; // degenerate distribution at 0
    // E[tanh(x/2)], x = mu + sqrt(2 mu) t, t ~ N(0,1); truncate |t| <= 10
    // (tail below 1e-22) and integrate with composite Simpson
    const double sigma = std::sqrt(2.0 * mu);
    const int n = 4096; // even panel count; Simpson error ~ (20/n)^4
    const double a = -10.0, b = 10.0, h = (b - a) / n;
    const double inv_sqrt2pi = 0.3989422804014327;
    auto f = [&](double t) {
        return std::tanh(0.5 * (mu + sigma * t)) * inv_sqrt2pi * std::exp(-0.5 * t * t);
    };
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return std::clamp(s * h / 3.0, 0.0, 1.0 - 1e-16);
}

double psi_approx(double mu, PsiVariant variant) {
    if (variant == PsiVariant::ApproxA) {
        if (mu <= 0 || mu > 10) throw std::invalid_argument("psi_approx: variant A needs 0 < mu <= 10");
        return std::min(1.0 - std::exp(-0.4527 * std::pow(mu, 0.86) + 0.0218), 1.0 - 1e-16);
    }
    if (variant == PsiVariant::ApproxB) {
        if (mu < 0) throw std::invalid_argument("psi_approx: mu must be >= 0");
        if (mu == 0) return 0.0;
        return std::min(1.0 - std::exp(-0.432 * std::pow(mu, 0.88)), 1.0 - 1e-16);
    }
    throw std::invalid_argument("psi_approx: not an approximation variant");
}

double psi(double mu, PsiVariant variant) {
    switch (variant) {
        case PsiVariant::Exact:
            return psi_exact(mu);
        case PsiVariant::ApproxA:
            if (mu == 0) return 0.0;
            return mu <= 10 ? psi_approx(mu, PsiVariant::ApproxA) : psi_approx(mu, PsiVariant::ApproxB);
        case PsiVariant::ApproxB:
            return psi_approx(mu, PsiVariant::ApproxB);
    }
    throw std::invalid_argument("psi: bad variant");
}

double psi_inv(double y, PsiVariant variant) {
    if (y < 0 || y >= 1) throw std::invalid_argument("psi_inv: y must lie in [0, 1)");
    if (y == 0) return 0.0;
    if (y > 1.0 - 1e-15) return 1e9; // saturated: certain bit, caller caps
    if (variant == PsiVariant::ApproxB)
        return std::pow(-std::log(1.0 - y) / 0.432, 1.0 / 0.88);
    if (variant == PsiVariant::ApproxA) {
        double mu = std::pow((0.0218 - std::log(1.0 - y)) / 0.4527, 1.0 / 0.86);
        if (mu <= 10) return mu;
        return psi_inv(y, PsiVariant::ApproxB); // variant A hands off above its domain
    }
    // exact: monotone bisection
    double lo = 0.0, hi = 1.0;
    while (psi_exact(hi) < y) {
        hi *= 2.0;
        if (hi > 1e9) return hi; // y indistinguishable from sup
    }
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        double v = psi_exact(mid);
        if (v < y) lo = mid;
        else hi = mid;
        if (hi - lo <= 1e-9 * std::max(1.0, hi) && std::abs(v - y) <= 1e-9) break;
    }
    return 0.5 * (lo + hi);
}

DegreeProfile degree_profile(EnsembleKind kind, int d) {
    if (d < 2) throw std::invalid_argument("degree_profile: D must be >= 2");
    DegreeProfile p;
    if (kind == EnsembleKind::LDGM || kind == EnsembleKind::EcLdgm) {
        p.lambda[1] = 1.0 / (1.0 + d);
        p.lambda[d] = static_cast<double>(d) / (1.0 + d);
        p.rho[d + 1] = 1.0;
        p.dv_max = d;
        p.dc_max = d + 1;
    } else if (kind == EnsembleKind::LtLdpc) {
        for (int i = 1; i < d; ++i) p.lambda[i] = 2.0 * i / (static_cast<double>(d) * (3 * d + 1));
        p.lambda[d] = 2.0 * (d + 1) / (3.0 * d + 1);
        for (int j = d + 1; j <= 2 * d; ++j)
            p.rho[j] = 2.0 * (j - d) / (static_cast<double>(d) * (d + 1));
        p.dv_max = d;
        p.dc_max = 2 * d;
    } else {
        throw std::invalid_argument("degree_profile: unsupported ensemble");
    }
    p.xi[d] = 1.0;
    return p;
}

ChannelMix ChannelMix::uniform(std::vector<double> mu0_values) {
    ChannelMix mix;
    mix.weight.assign(mu0_values.size(), 1.0 / static_cast<double>(mu0_values.size()));
    mix.mu0 = std::move(mu0_values);
    return mix;
}

ChannelMix ChannelMix::rayleigh_grid(double snr_scale, int panels) {
    // E_{e ~ Exp(1)} f(s e) = int_0^1 f(-s ln u) du, composite Simpson;
    // the u = 0 endpoint corresponds to an arbitrarily strong channel
    if (panels % 2) ++panels;
    ChannelMix mix;
    mix.mu0.reserve(panels + 1);
    mix.weight.reserve(panels + 1);
    const double h = 1.0 / panels;
    double wsum = 0.0;
    for (int i = 0; i <= panels; ++i) {
        double u = i * h;
        double mu = u == 0.0 ? snr_scale * 60.0 : -snr_scale * std::log(u);
        double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        mix.mu0.push_back(mu);
        mix.weight.push_back(w);
        wsum += w;
    }
    for (auto& w : mix.weight) w /= wsum;
    return mix;
}

std::vector<double> de_general(const DegreeProfile& prof, const ChannelMix& mix, int iters,
                               PsiVariant variant, double divergence_cap, bool pool_means) {
    if (iters < 1) throw std::invalid_argument("de_general: iters must be >= 1");
    if (mix.mu0.size() != mix.weight.size() || mix.mu0.empty())
        throw std::invalid_argument("de_general: bad channel mix");
    for (double m0 : mix.mu0)
        if (!(m0 >= 0)) throw std::invalid_argument("de_general: channel means must be >= 0");

    double pooled = 0.0;
    for (std::size_t q = 0; q < mix.mu0.size(); ++q) pooled += mix.weight[q] * mix.mu0[q];

    std::vector<double> traj;
    traj.reserve(iters);
    double mu_u = 0.0;
    for (int l = 0; l < iters; ++l) {
        // inner mixture over variable degrees (and channels when the means
        // are not pooled)
        double bracket = 0.0;
        for (const auto& [i, li] : prof.lambda) {
            double s = 0.0;
            if (pool_means) {
                s = psi(std::min(pooled + (i - 1) * mu_u, divergence_cap), variant);
            } else {
                for (std::size_t q = 0; q < mix.mu0.size(); ++q)
                    s += mix.weight[q] * psi(std::min(mix.mu0[q] + (i - 1) * mu_u, divergence_cap), variant);
            }
            bracket += li * s;
        }
        bracket = std::min(bracket, 1.0 - 1e-16); // weighted sums may round up
        double next = 0.0;
        for (const auto& [j, rj] : prof.rho)
            next += rj * psi_inv(std::pow(bracket, j - 1), variant);
        if (!std::isfinite(next)) throw std::runtime_error("de_general: divergent iterate");
        next = std::min(next, divergence_cap);
        // cap and machine-precision stalls are fixed points; skip ahead
        bool stalled = next >= divergence_cap || std::abs(next - mu_u) <= 1e-13 * std::max(1.0, next);
        mu_u = next;
        traj.push_back(mu_u);
        if (stalled) {
            while (static_cast<int>(traj.size()) < iters) traj.push_back(mu_u);
            break;
        }
    }
    return traj;
}

double error_prob(const DegreeProfile& prof, double mu_u, const ChannelMix& mix) {
    double pe = 0.0;
    for (const auto& [i, xi] : prof.xi) {
        double s = 0.0;
        for (std::size_t q = 0; q < mix.mu0.size(); ++q)
            s += mix.weight[q] * q_func(std::sqrt(0.5 * (mix.mu0[q] + i * mu_u)));
        pe += xi * s;
    }
    return pe;
}

EcParams EcParams::regular(int d) {
    EcParams p;
    p.sys_check_degree = d;
    p.dv = d;
    p.lambda_s[d] = 1.0;
    p.xi[d] = 1.0;
    return p;
}

double de_ec_ldgm(const EcParams& params, const ChannelMix& mix, int iters, PsiVariant variant,
                  double divergence_cap) {
    if (params.sys_check_degree < 1) throw std::invalid_argument("de_ec_ldgm: |R_s| must be >= 1");
    if (iters < 1) throw std::invalid_argument("de_ec_ldgm: iters must be >= 1");
    const std::size_t m = mix.mu0.size();
    if (m == 0 || mix.weight.size() != m) throw std::invalid_argument("de_ec_ldgm: bad channel mix");

    std::vector<double> mu_us(m, 0.0), mu_up(m, 0.0);
    double mu_us_bar = 0.0;

    auto cap = [&](double x) { return std::min(x, divergence_cap); };

    for (int l = 0; l < iters; ++l) {
        // variable updates: systematic nodes fan in (dv - 1) averaged check
        // messages; parity nodes (degree 2) fan in one
        double sys_factor = 0.0; // weighted Psi of systematic variable outputs
        for (const auto& [i, li] : params.lambda_s) {
            double s = 0.0;
            for (std::size_t t = 0; t < m; ++t)
                s += mix.weight[t] * psi(cap(mix.mu0[t] + (i - 1) * mu_us_bar), variant);
            sys_factor += li * s;
        }
        sys_factor = std::min(sys_factor, 1.0 - 1e-16); // weighted sums may round up
        std::vector<double> par_factor(m); // Psi of parity variable outputs per channel
        double par_factor_avg = 0.0;
        for (std::size_t t = 0; t < m; ++t) {
            par_factor[t] = psi(cap(mix.mu0[t] + mu_up[t]), variant);
            par_factor_avg += mix.weight[t] * par_factor[t];
        }
        par_factor_avg = std::min(par_factor_avg, 1.0 - 1e-16);

        // check updates: to a systematic variable, |R_s|-1 systematic
        // factors and the parity pair squared; to a parity variable, |R_s|
        // systematic factors and the other parity bit
        const double sys_pow_m1 = std::pow(sys_factor, params.sys_check_degree - 1);
        const double sys_pow = sys_pow_m1 * sys_factor;
        double next_bar = 0.0;
        for (std::size_t t = 0; t < m; ++t) {
            double pf = params.parity_same_fade ? par_factor[t] : par_factor_avg;
            double ps = params.parity_coupling ? pf : 1.0;
            double us = psi_inv(sys_pow_m1 * ps * ps, variant);
            double up = psi_inv(sys_pow * (params.parity_coupling ? pf : 1.0), variant);
            mu_us[t] = cap(us);
            mu_up[t] = cap(up);
            next_bar += mix.weight[t] * mu_us[t];
        }
        if (!std::isfinite(next_bar)) throw std::runtime_error("de_ec_ldgm: divergent iterate");
        bool stalled = std::abs(next_bar - mu_us_bar) <= 1e-13 * std::max(1.0, next_bar);
        mu_us_bar = next_bar;
        if (stalled) break;
    }

    // final posterior error over systematic nodes
    double pe = 0.0;
    for (const auto& [i, xi] : params.xi) {
        double s = 0.0;
        for (std::size_t t = 0; t < m; ++t)
            s += mix.weight[t] * q_func(std::sqrt(0.5 * (mix.mu0[t] + i * mu_us_bar)));
        pe += xi * s;
    }
    return pe;
}

double evaluate_pe(DeEnsemble ensemble, int d, const ChannelMix& mix, int iters, PsiVariant variant,
                   bool block_fading) {
    if (ensemble == DeEnsemble::EcLdgm) {
        EcParams p = EcParams::regular(d);
        p.parity_same_fade = block_fading;
        return de_ec_ldgm(p, mix, iters, variant);
    }
    DegreeProfile prof = degree_profile(
        ensemble == DeEnsemble::Ldgm ? EnsembleKind::LDGM : EnsembleKind::LtLdpc, d);
    // block fading pools the finite per-user means; per-bit fading keeps
    // the full mixture in the bracket
    auto traj = de_general(prof, mix, iters, variant, 1e4, block_fading);
    return error_prob(prof, traj.back(), mix);
}

double fading_average(DeEnsemble ensemble, int d, double snr_db, int m, FadingKind fading,
                      int n_samples, int iters, PsiVariant variant, std::uint64_t seed) {
    const double snr = std::pow(10.0, snr_db / 10.0);
    if (fading == FadingKind::Iid) {
        ChannelMix mix = ChannelMix::rayleigh_grid(4.0 * snr);
        return evaluate_pe(ensemble, d, mix, iters, variant, /*block_fading=*/false);
    }
    if (n_samples < 1) throw std::invalid_argument("fading_average: n_samples must be >= 1");
    Rng rng(mix64(seed));
    std::exponential_distribution<double> expo(1.0);
    double acc = 0.0;
    std::vector<double> mu0(m);
    for (int s = 0; s < n_samples; ++s) {
        for (int q = 0; q < m; ++q) mu0[q] = 4.0 * snr * expo(rng);
        acc += evaluate_pe(ensemble, d, ChannelMix::uniform(mu0), iters, variant, true);
    }
    return acc / n_samples;
}

} // namespace gancc::de
