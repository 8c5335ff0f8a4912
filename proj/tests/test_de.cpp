#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gancc/decoder.hpp"
#include "gancc/density_evolution.hpp"
#include "gancc/gf2.hpp"
#include "test_support.hpp"

using namespace gancc;
using namespace gancc::de;

TEST_CASE("psi exact basics") {
    CHECK(psi_exact(0.0) == 0.0);
    CHECK(psi_exact(50.0) > 0.999);
    CHECK(psi_exact(1.0) == doctest::Approx(0.3501).epsilon(0.03));
    CHECK_THROWS(psi_exact(-1.0));

    // strictly increasing on a grid
    double prev = -1;
    for (double mu = 0.0; mu <= 50.0; mu += 0.5) {
        double v = psi_exact(mu);
        CHECK(v > prev);
        CHECK(v < 1.0);
        prev = v;
    }
}

TEST_CASE("psi approximations track the quadrature") {
    CHECK(psi_approx(1.0, PsiVariant::ApproxA) == doctest::Approx(0.3501).epsilon(1e-3));
    CHECK(psi_approx(0.0, PsiVariant::ApproxB) == 0.0);
    CHECK_THROWS(psi_approx(11.0, PsiVariant::ApproxA));

    double worst_a = 0, worst_b = 0;
    for (double mu = 0.05; mu <= 10.0; mu += 0.05)
        worst_a = std::max(worst_a, std::abs(psi_approx(mu, PsiVariant::ApproxA) - psi_exact(mu)));
    for (double mu = 0.05; mu <= 50.0; mu += 0.05)
        worst_b = std::max(worst_b, std::abs(psi_approx(mu, PsiVariant::ApproxB) - psi_exact(mu)));
    CHECK(worst_a <= 0.02);
    CHECK(worst_b <= 0.02);
}

TEST_CASE("psi_inv inverts every variant") {
    for (auto variant : {PsiVariant::Exact, PsiVariant::ApproxA, PsiVariant::ApproxB}) {
        CHECK(psi_inv(0.0, variant) == 0.0);
        for (double mu : {0.1, 0.5, 2.0, 10.0, 30.0, 50.0}) {
            double y = psi(mu, variant);
            CHECK(psi_inv(y, variant) == doctest::Approx(mu).epsilon(1e-6));
        }
    }
    CHECK(psi_inv(psi_exact(2.0), PsiVariant::Exact) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK_THROWS(psi_inv(1.0, PsiVariant::ApproxB));
    CHECK_THROWS(psi_inv(-0.1, PsiVariant::ApproxB));

    // strictly increasing
    double prev = -1;
    for (double y = 0.0; y < 0.999; y += 0.013) {
        double mu = psi_inv(y, PsiVariant::ApproxB);
        CHECK(mu > prev);
        prev = mu;
    }
}

TEST_CASE("degree profiles match the rate-1/2 families") {
    auto ldgm = degree_profile(EnsembleKind::LDGM, 3);
    CHECK(ldgm.lambda.at(1) == doctest::Approx(0.25));
    CHECK(ldgm.lambda.at(3) == doctest::Approx(0.75));
    CHECK(ldgm.rho.at(4) == doctest::Approx(1.0));
    CHECK(ldgm.xi.at(3) == doctest::Approx(1.0));

    auto lt = degree_profile(EnsembleKind::LtLdpc, 3);
    CHECK(lt.lambda.at(1) == doctest::Approx(1.0 / 15));
    CHECK(lt.lambda.at(2) == doctest::Approx(2.0 / 15));
    CHECK(lt.lambda.at(3) == doctest::Approx(12.0 / 15));
    CHECK(lt.rho.at(4) == doctest::Approx(1.0 / 6));
    CHECK(lt.rho.at(5) == doctest::Approx(1.0 / 3));
    CHECK(lt.rho.at(6) == doctest::Approx(1.0 / 2));

    CHECK_THROWS(degree_profile(EnsembleKind::LtLdpc, 1));

    for (int d = 2; d <= 10; ++d) {
        for (auto kind : {EnsembleKind::LDGM, EnsembleKind::LtLdpc}) {
            auto p = degree_profile(kind, d);
            double sl = 0, sr = 0, sx = 0;
            for (auto& [i, v] : p.lambda) sl += v;
            for (auto& [j, v] : p.rho) sr += v;
            for (auto& [i, v] : p.xi) sx += v;
            CHECK(std::abs(sl - 1.0) < 1e-12);
            CHECK(std::abs(sr - 1.0) < 1e-12);
            CHECK(std::abs(sx - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("de_general fixed point at zero and growth at high SNR") {
    DegreeProfile p36;
    p36.lambda[3] = 1.0;
    p36.rho[6] = 1.0;
    p36.xi[3] = 1.0;

    auto zero = de_general(p36, ChannelMix::uniform({0.0}), 10, PsiVariant::ApproxB);
    for (double v : zero) CHECK(v == 0.0);

    auto hot = de_general(p36, ChannelMix::uniform({20.0, 20.0, 20.0}), 10, PsiVariant::ApproxB);
    for (std::size_t i = 1; i < hot.size(); ++i) CHECK(hot[i] >= hot[i - 1]);
    CHECK(hot.back() > 100.0);
}

TEST_CASE("error_prob formula values") {
    DegreeProfile p;
    p.xi[1] = 1.0;
    CHECK(error_prob(p, 0.0, ChannelMix::uniform({0.0})) == doctest::Approx(0.5));

    // mu(i,q) = mu0 + i*mu_u = 2 + 3*1 = 5
    DegreeProfile p3;
    p3.xi[3] = 1.0;
    double expect = 0.5 * std::erfc(std::sqrt(5.0 / 2) / std::sqrt(2.0));
    CHECK(error_prob(p3, 1.0, ChannelMix::uniform({2.0})) == doctest::Approx(expect).epsilon(1e-12));

    CHECK(error_prob(p3, 1e4, ChannelMix::uniform({50.0})) < 1e-9);
}

TEST_CASE("de monotone in SNR") {
    auto prof = degree_profile(EnsembleKind::LtLdpc, 3);
    double prev = 1.0;
    for (double mu0 = 0.5; mu0 <= 12.0; mu0 += 0.5) {
        auto mix = ChannelMix::uniform({mu0, 0.8 * mu0, 1.2 * mu0});
        auto traj = de_general(prof, mix, 60, PsiVariant::ApproxB);
        double pe = error_prob(prof, traj.back(), mix);
        CHECK(pe <= prev + 1e-12);
        prev = pe;
    }
}

TEST_CASE("a dead channel degrades the mixture") {
    auto prof = degree_profile(EnsembleKind::LtLdpc, 3);
    const double mu = 6.0;
    auto even = ChannelMix::uniform({mu, mu, mu, mu});
    // one of m channels erased, same total SNR budget spread over the rest
    auto dead = ChannelMix::uniform({4 * mu / 3, 4 * mu / 3, 4 * mu / 3, 0.0});
    auto te = de_general(prof, even, 50, PsiVariant::ApproxB);
    auto td = de_general(prof, dead, 50, PsiVariant::ApproxB);
    CHECK(error_prob(prof, td.back(), dead) >= error_prob(prof, te.back(), even));
}

TEST_CASE("ec-ldgm zero fixed point and m=1 degeneration") {
    auto p = EcParams::regular(3);
    CHECK(de_ec_ldgm(p, ChannelMix::uniform({0.0, 0.0}), 25, PsiVariant::ApproxB) == doctest::Approx(0.5));

    // with parity coupling disabled the recursion is plain de_general with
    // lambda = {dv:1}, rho = {|R_s|:1}
    auto pc = EcParams::regular(4);
    pc.parity_coupling = false;
    for (double mu0 : {1.0, 3.0, 6.0}) {
        double pe_ec = de_ec_ldgm(pc, ChannelMix::uniform({mu0}), 30, PsiVariant::ApproxB);
        DegreeProfile prof;
        prof.lambda[4] = 1.0;
        prof.rho[4] = 1.0;
        prof.xi[4] = 1.0;
        auto traj = de_general(prof, ChannelMix::uniform({mu0}), 30, PsiVariant::ApproxB);
        double pe_gen = error_prob(prof, traj.back(), ChannelMix::uniform({mu0}));
        CHECK(pe_ec == doctest::Approx(pe_gen).epsilon(1e-6));
    }
}

TEST_CASE("block-fading ensemble ordering at a fixed operating point") {
    // LDGM worst, EC-LDGM in between, LT-LDPC best
    const double snr_db = 12.0;
    double ldgm = fading_average(DeEnsemble::Ldgm, 3, snr_db, 5, FadingKind::Block, 400, 60,
                                 PsiVariant::ApproxB, 1);
    double ec = fading_average(DeEnsemble::EcLdgm, 3, snr_db, 5, FadingKind::Block, 400, 60,
                               PsiVariant::ApproxB, 1);
    double lt = fading_average(DeEnsemble::LtLdpc, 3, snr_db, 5, FadingKind::Block, 400, 60,
                               PsiVariant::ApproxB, 1);
    CHECK(ldgm > ec);
    CHECK(ec > lt);
}

TEST_CASE("fading_average basics") {
    double lo = fading_average(DeEnsemble::LtLdpc, 3, 40.0, 5, FadingKind::Block, 200, 40,
                               PsiVariant::ApproxB, 2);
    CHECK(lo < 1e-6);

    // a single pinned draw equals the direct evaluation
    Rng rng(mix64(9));
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> mu0(5);
    const double snr = std::pow(10.0, 8.0 / 10.0);
    for (auto& v : mu0) v = 4.0 * snr * expo(rng);
    auto prof = degree_profile(EnsembleKind::LtLdpc, 3);
    auto mix = ChannelMix::uniform(mu0);
    auto traj = de_general(prof, mix, 40, PsiVariant::ApproxB);
    double direct = error_prob(prof, traj.back(), mix);
    double sampled = fading_average(DeEnsemble::LtLdpc, 3, 8.0, 5, FadingKind::Block, 1, 40,
                                    PsiVariant::ApproxB, 9);
    CHECK(sampled == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("de tracks Monte Carlo BP means on a large sampled graph" * doctest::skip(false)) {
    // regular (3,6), single channel, moderate SNR so several iterations
    // stay below the tanh saturation range
    const double mu0 = 3.0;
    const int n = 33334; // ~1e5 edges
    auto h = generate_regular_ldpc(n, 3, 6, 4242);

    Rng rng(mix64(31337));
    std::normal_distribution<double> g(mu0, std::sqrt(2 * mu0));
    std::vector<double> llr(n);
    for (auto& v : llr) v = g(rng); // all-zero codeword

    std::vector<double> mc_means;
    BpOptions opt;
    opt.max_iters = 6;
    opt.early_exit = false;
    opt.llr_clamp = 300.0;
    opt.c2v_mean_trace = &mc_means;
    SumProductDecoder dec(h);
    dec.decode(llr, opt);

    DegreeProfile p36;
    p36.lambda[3] = 1.0;
    p36.rho[6] = 1.0;
    p36.xi[3] = 1.0;
    auto traj = de_general(p36, ChannelMix::uniform({mu0}), 6, PsiVariant::Exact);

    REQUIRE(mc_means.size() == traj.size());
    for (std::size_t l = 0; l < traj.size(); ++l) {
        if (traj[l] > 25) break; // beyond double-precision tanh resolution
        CHECK(mc_means[l] == doctest::Approx(traj[l]).epsilon(0.05));
    }
}

TEST_CASE("de threshold agrees with the Monte Carlo BP oracle" * doctest::skip(false)) {
    // (3,6) single Gaussian channel. The Monte Carlo oracle decodes the
    // all-zero codeword on a sampled graph over a sigma grid; success =
    // residual BER below 1e-3 at 250 iterations.
    const int n = 40000;
    auto h = generate_regular_ldpc(n, 3, 6, 555);
    SumProductDecoder dec(h);

    auto mc_ok = [&](double sigma) {
        int ok = 0;
        const int trials = 6;
        for (int t = 0; t < trials; ++t) {
            Rng rng(mix64(derive_seed(808, {static_cast<std::uint64_t>(sigma * 1e6), static_cast<std::uint64_t>(t)})));
            std::normal_distribution<double> g(2.0 / (sigma * sigma), 2.0 / sigma);
            std::vector<double> llr(n);
            for (auto& v : llr) v = g(rng);
            BpOptions opt;
            opt.max_iters = 250;
            auto res = dec.decode(llr, opt);
            long errs = 0;
            for (auto b : res.hard) errs += b;
            ok += errs < n / 1000;
        }
        return ok * 2 >= trials; // majority succeeds
    };

    // bisect both estimates to a 0.0025 sigma grid
    auto de_diverges = [&](double sigma) {
        DegreeProfile p36;
        p36.lambda[3] = 1.0;
        p36.rho[6] = 1.0;
        p36.xi[3] = 1.0;
        auto traj = de_general(p36, ChannelMix::uniform({2.0 / (sigma * sigma)}), 2500, PsiVariant::Exact);
        return traj.back() > 100.0;
    };

    auto bisect = [](double lo, double hi, const std::function<bool(double)>& good) {
        while (hi - lo > 0.0025) {
            double mid = 0.5 * (lo + hi);
            if (good(mid)) lo = mid;
            else hi = mid;
        }
        return lo;
    };

    double sigma_mc = bisect(0.82, 0.95, mc_ok);
    double sigma_de = bisect(0.82, 0.95, de_diverges);
    double gap_db = std::abs(20.0 * std::log10(sigma_mc / sigma_de));
    CHECK(gap_db <= 0.05);
}
