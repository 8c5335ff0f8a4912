#ifndef GANCC_DENSITY_EVOLUTION_HPP
#define GANCC_DENSITY_EVOLUTION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "gancc/channel.hpp"
#include "gancc/parity_matrix.hpp"
#include "gancc/rng.hpp"

namespace gancc::de {

// Psi(mu) = E[tanh(x/2)] for x ~ N(mu, 2*mu). Strictly increasing from 0,
// sup below 1.
enum class PsiVariant { Exact, ApproxA, ApproxB };

// quadrature of the defining integral, relative error <= 1e-8
double psi_exact(double mu);
// closed forms: A = 1 - exp(-0.4527 mu^0.86 + 0.0218), valid 0 < mu <= 10;
//               B = 1 - exp(-0.432 mu^0.88), valid for all mu > 0
double psi_approx(double mu, PsiVariant variant);

// variant dispatch; ApproxA hands off to ApproxB above its mu <= 10 domain
// so iterating evolutions stay defined
double psi(double mu, PsiVariant variant);
// monotone inverse: |Psi(mu) - y| <= 1e-9, mu resolved to ~1e-9 relative
double psi_inv(double y, PsiVariant variant);

// Edge-perspective degree profiles (lambda over variable degrees, rho over
// check degrees) plus the node-perspective systematic profile xi'.
struct DegreeProfile {
    std::map<int, double> lambda;
    std::map<int, double> rho;
    std::map<int, double> xi;
    int dv_max = 0;
    int dc_max = 0;
};

// Rate-1/2 degree-D profiles.
//   LDGM: lambda = 1/(1+D) at degree 1 and D/(1+D) at D; rho at D+1.
//   LT-LDPC: lambda_i = 2i/(D(3D+1)) for i < D plus 2(D+1)/(3D+1) at D;
//            rho_j proportional to (j - D) on D+1..2D, normalized to sum
//            one (denominator D(D+1)).
// xi' is concentrated at D for both.
DegreeProfile degree_profile(EnsembleKind kind, int d);

// A population of channel LLR means with mixing weights: m block-fading
// users at weight 1/m each, or a quadrature grid for IID fading.
struct ChannelMix {
    std::vector<double> mu0;
    std::vector<double> weight;

    static ChannelMix uniform(std::vector<double> mu0_values);
    // nodes integrating E_{e ~ Exp(1)} f(snr_scale * e)
    static ChannelMix rayleigh_grid(double snr_scale, int panels = 256);
};

// Mean trajectory of the check-to-variable messages; index l holds the
// mean after iteration l+1. Means cap at divergence_cap. With pool_means
// the per-channel means collapse to their weighted average inside the
// recursion (the block-fading treatment; the error formula stays
// per-channel); without it each channel contributes its own Psi value to
// the bracket (per-bit fading mixtures).
std::vector<double> de_general(const DegreeProfile& prof, const ChannelMix& mix, int iters,
                               PsiVariant variant, double divergence_cap = 1e4,
                               bool pool_means = true);

// p_e = sum_i xi'_i * sum_q w_q * Q( sqrt((mu0_q + i*mu_u)/2) )
double error_prob(const DegreeProfile& prof, double mu_u, const ChannelMix& mix);

// EC-LDGM evolution: systematic and parity variable populations tracked
// separately per channel. sys_check_degree is the number of systematic
// bits per check; parity bits enter each check twice (zigzag) and share
// the channel of the check's owner when parity_same_fade is set (block
// fading), mixing over channels otherwise (IID).
struct EcParams {
    int sys_check_degree = 3;       // |R_s|
    int dv = 3;                     // max systematic variable degree
    std::map<int, double> lambda_s; // edge-perspective systematic profile
    std::map<int, double> xi;       // node-perspective systematic profile
    bool parity_same_fade = true;
    bool parity_coupling = true;    // test hook: false freezes parity factors at 1

    static EcParams regular(int d);
};

double de_ec_ldgm(const EcParams& params, const ChannelMix& mix, int iters, PsiVariant variant,
                  double divergence_cap = 1e4);

enum class DeEnsemble { Ldgm, LtLdpc, EcLdgm };

// Rayleigh expectation of p_e at the given per-bit SNR. Block fading draws
// n_samples realizations of the m per-user means mu0 = 4 |alpha|^2 snr;
// IID fading integrates the |alpha|^2 ~ Exp(1) mixture on a fixed grid
// (one deterministic evaluation).
double fading_average(DeEnsemble ensemble, int d, double snr_db, int m, FadingKind fading,
                      int n_samples, int iters, PsiVariant variant, std::uint64_t seed);

// single evaluation at a pinned channel mix; block_fading selects pooled
// means (and the same-fade parity pair for EC-LDGM)
double evaluate_pe(DeEnsemble ensemble, int d, const ChannelMix& mix, int iters, PsiVariant variant,
                   bool block_fading);

} // namespace gancc::de

#endif
