#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gancc/channel.hpp"

using namespace gancc;

TEST_CASE("bpsk mapping") {
    CHECK(bpsk_modulate({0, 1, 0}) == std::vector<double>{1.0, -1.0, 1.0});
    CHECK(bpsk_modulate({}).empty());
    CHECK(bpsk_modulate({1, 1, 1}) == std::vector<double>{-1.0, -1.0, -1.0});
}

TEST_CASE("fading coefficient counts") {
    Rng rng(1);
    auto block = sample_fading(FadingKind::Block, 5, 1000, 1.0, rng);
    CHECK(block.alpha.size() == 5);
    auto iid = sample_fading(FadingKind::Iid, 5, 100, 1.0, rng);
    CHECK(iid.alpha.size() == 100);
}

TEST_CASE("fading power is unit on average") {
    Rng rng(2);
    double sum = 0;
    const int n = 100000;
    auto ch = sample_fading(FadingKind::Iid, 1, n, 1.0, rng);
    for (const auto& a : ch.alpha) sum += std::norm(a);
    CHECK(std::abs(sum / n - 1.0) < 0.02);
}

TEST_CASE("channel edge cases") {
    Rng rng(3);
    ChannelRealization ch;
    ch.kind = FadingKind::Block;
    ch.alpha = {{0.6, -0.8}};
    ch.n0 = 1e-300; // noiseless limit
    auto y = apply_channel({1.0, -1.0}, ch, 2, rng);
    CHECK(std::abs(y[0] - ch.alpha[0]) < 1e-9);
    CHECK(std::abs(y[1] + ch.alpha[0]) < 1e-9);

    ch.alpha = {{0.0, 0.0}};
    ch.n0 = 1.0;
    auto y2 = apply_channel({1.0}, ch, 1, rng);
    CHECK(std::abs(y2[0]) < 10.0); // noise only
    auto llr = llr_demap(y2, ch, 1);
    CHECK(llr[0] == 0.0); // erasure
}

TEST_CASE("empirical output SNR matches E|alpha|^2 / N0") {
    Rng rng(4);
    const int n = 100000;
    const double n0 = 0.5;
    auto ch = sample_fading(FadingKind::Iid, 1, n, n0, rng);
    std::vector<double> x(n, 1.0);
    auto y = apply_channel(x, ch, 1, rng);
    double sig = 0, noise = 0;
    for (int k = 0; k < n; ++k) {
        sig += std::norm(ch.alpha[k]);
        noise += std::norm(y[k] - ch.alpha[k]);
    }
    double snr = sig / noise;
    CHECK(std::abs(snr - 1.0 / n0) < 0.05 * (1.0 / n0));
}

TEST_CASE("llr demap worked values") {
    ChannelRealization ch;
    ch.kind = FadingKind::Block;
    ch.alpha = {{1.0, 0.0}};
    ch.n0 = 2.0;
    auto llr = llr_demap({{1.0, 0.0}}, ch, 1);
    CHECK(llr[0] == doctest::Approx(2.0)); // mean 2/sigma^2 with sigma^2 = 1
    auto llr2 = llr_demap({{-0.5, 0.0}}, ch, 1);
    CHECK(llr2[0] == doctest::Approx(-1.0));
}

TEST_CASE("llr symmetry: variance is twice the mean for fixed alpha") {
    Rng rng(5);
    for (double amag : {0.5, 1.0, 1.7}) {
        ChannelRealization ch;
        ch.kind = FadingKind::Block;
        ch.alpha = {{amag, 0.0}};
        ch.n0 = 0.8;
        const int n = 100000;
        std::vector<double> x(n, 1.0); // all-zero codeword
        auto y = apply_channel(x, ch, n, rng);
        auto llr = llr_demap(y, ch, n);
        double mean = 0;
        for (double v : llr) mean += v;
        mean /= n;
        double var = 0;
        for (double v : llr) var += (v - mean) * (v - mean);
        var /= n - 1;
        CHECK(std::abs(var - 2 * mean) < 0.05 * 2 * mean);
        CHECK(std::abs(mean - 4 * amag * amag / ch.n0) < 0.05 * mean);
    }
}

TEST_CASE("block fading ties a user's source and relay packets") {
    Rng rng(6);
    const int m = 4, n = 10;
    auto ch = sample_fading(FadingKind::Block, m, 2 * m * n, 1.0, rng);
    for (int u = 0; u < m; ++u)
        for (int k = 0; k < n; ++k) {
            CHECK(alpha_at(ch, n, u * n + k) == ch.alpha[u]);
            CHECK(alpha_at(ch, n, (m + u) * n + k) == ch.alpha[u]);
        }
}

TEST_CASE("determinism per seed") {
    Rng a(9), b(9);
    auto ca = sample_fading(FadingKind::Iid, 1, 50, 0.3, a);
    auto cb = sample_fading(FadingKind::Iid, 1, 50, 0.3, b);
    auto ya = apply_channel(std::vector<double>(50, 1.0), ca, 1, a);
    auto yb = apply_channel(std::vector<double>(50, 1.0), cb, 1, b);
    CHECK(ya == yb);
}
