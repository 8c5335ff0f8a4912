#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "gancc/harness.hpp"

using namespace gancc;

namespace {

SimConfig small_config() {
    SimConfig cfg;
    cfg.m = 3;
    cfg.packet_len = 64;
    cfg.ensemble = "lt-ldpc";
    cfg.selection = "cwc";
    cfg.degree = 2;
    cfg.fading = "block";
    cfg.snr_db = {6.0, 10.0};
    cfg.decoder = "joint";
    cfg.bp_iters = 20;
    cfg.trials = 40;
    cfg.seed = 42;
    cfg.seed_set = true;
    cfg.workers = 1;
    return cfg;
}

} // namespace

TEST_CASE("config parsing and overrides") {
    const char* path = "test_config.tmp";
    {
        std::ofstream os(path);
        os << "# comment line\n";
        os << "m = 4\n";
        os << "packet_len = 128\n";
        os << "snr_db = 0, 2, 4\n";
        os << "decoder = iterative:5\n";
        os << "seed = 7\n";
        os << "trials = 10\n";
    }
    auto cfg = load_config_file(path);
    CHECK(cfg.m == 4);
    CHECK(cfg.packet_len == 128);
    CHECK(cfg.snr_db == std::vector<double>{0, 2, 4});
    CHECK(cfg.global_rounds() == 5);
    CHECK(cfg.seed == 7);
    CHECK(cfg.seed_set);

    apply_config_line(cfg, "m", "6");
    CHECK(cfg.m == 6);
    CHECK_THROWS(apply_config_line(cfg, "not_a_key", "1"));

    cfg.validate();
    std::remove(path);
}

TEST_CASE("config validation rejects bad combinations") {
    auto cfg = small_config();
    cfg.snr_db.clear();
    CHECK_THROWS(cfg.validate());

    cfg = small_config();
    cfg.ensemble = "ec-ldgm";
    cfg.channel_code = "regular:3,6";
    CHECK_THROWS(cfg.validate());

    cfg = small_config();
    cfg.decoder = "whatever";
    CHECK_THROWS(cfg.validate());
}

TEST_CASE("identical trial seeds give identical counts") {
    auto cfg = small_config();
    auto ctx = SweepContext::build(cfg);
    auto a = run_trial(cfg, ctx, 8.0, 0, 17);
    auto b = run_trial(cfg, ctx, 8.0, 0, 17);
    CHECK(a.bit_errors == b.bit_errors);
    CHECK(a.pkt_errors == b.pkt_errors);
    CHECK(a.bits == b.bits);
}

TEST_CASE("noise-free limit decodes cleanly") {
    auto cfg = small_config();
    cfg.snr_db = {60.0};
    cfg.trials = 20;
    auto res = run_sweep(cfg);
    CHECK(res.points[0].c.bit_errors == 0);
    CHECK(res.points[0].c.pkt_errors == 0);
}

TEST_CASE("bit conservation") {
    auto cfg = small_config();
    auto res = run_sweep(cfg);
    for (const auto& p : res.points) {
        CHECK(p.c.bits == static_cast<long long>(p.trials) * cfg.m * cfg.packet_len);
        CHECK(p.c.pkts == static_cast<long long>(p.trials) * cfg.m);
    }

    // with channel codes only information bits count
    auto coded = small_config();
    coded.packet_len = 32;
    coded.channel_code = "regular:2,4";
    coded.decoder = "sequential";
    coded.trials = 10;
    auto ctx = SweepContext::build(coded);
    auto res2 = run_sweep(coded);
    CHECK(res2.points[0].c.bits == static_cast<long long>(res2.points[0].trials) * ctx.info_bits_per_trial());
}

TEST_CASE("csv body is byte-identical across worker counts") {
    auto cfg = small_config();
    cfg.workers = 1;
    auto a = run_sweep(cfg).csv();
    cfg.workers = 4;
    auto b = run_sweep(cfg).csv();
    CHECK(a == b);
    CHECK(a.rfind("scheme,ensemble,selection,decoder,m,N,snr_db,trials,bit_errors,bits,ber,pkt_errors,pkts,per\n", 0) == 0);

    // one SNR and one trial produce exactly one data row
    cfg.snr_db = {8.0};
    cfg.trials = 1;
    auto c = run_sweep(cfg).csv();
    CHECK(std::count(c.begin(), c.end(), '\n') == 2);
}

TEST_CASE("ber is monotone in snr up to Monte Carlo noise") {
    auto cfg = small_config();
    cfg.snr_db = {0.0, 8.0, 16.0, 30.0};
    cfg.trials = 150;
    auto res = run_sweep(cfg);
    // generous ordering check over a wide grid: each step down at least
    // covers the 95% band of the next
    for (std::size_t i = 1; i < res.points.size(); ++i) {
        double hi = res.points[i - 1].ber();
        double lo = res.points[i].ber();
        double slack = 2 * std::sqrt(lo / res.points[i].c.bits) + 2 * std::sqrt(hi / res.points[i - 1].c.bits);
        CHECK(lo <= hi + slack + 1e-9);
    }
}

TEST_CASE("early stop trims low-SNR points deterministically") {
    auto cfg = small_config();
    cfg.snr_db = {0.0};
    cfg.trials = 2000;
    cfg.min_bit_errors = 100;
    auto res = run_sweep(cfg);
    CHECK(res.points[0].trials < 2000);
    CHECK(res.points[0].c.bit_errors >= 100);

    cfg.workers = 3;
    auto res2 = run_sweep(cfg);
    CHECK(res.csv() == res2.csv());
}

TEST_CASE("seed is mandatory") {
    auto cfg = small_config();
    cfg.seed_set = false;
    CHECK_THROWS(run_sweep(cfg));
}

TEST_CASE("compare_de emits paired rows on the shared grid") {
    auto cfg = small_config();
    cfg.snr_db = {10.0};
    cfg.trials = 30;
    cfg.de_samples = 50;
    auto res = compare_de(cfg);
    REQUIRE(res.points.size() == 1);
    CHECK(res.points[0].snr_db == 10.0);
    CHECK(res.points[0].de_pe >= 0.0);
    auto csv = res.csv();
    CHECK(csv.rfind("ensemble,selection,m,N,D,snr_db,sim_ber,de_pe\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);

    cfg.channel_code = "regular:2,4";
    CHECK_THROWS(compare_de(cfg));
}

TEST_CASE("crossing interpolation") {
    std::vector<std::pair<double, double>> curve = {{0, 1e-1}, {2, 1e-2}, {4, 1e-3}, {6, 1e-4}};
    CHECK(crossing_snr(curve, 1e-2) == doctest::Approx(2.0));
    CHECK(crossing_snr(curve, 3.16227766e-3) == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(std::isnan(crossing_snr(curve, 1e-6)));
}

TEST_CASE("decoder strategies are reachable from config") {
    for (const char* dec : {"joint", "sequential", "iterative:2"}) {
        auto cfg = small_config();
        cfg.packet_len = 32;
        cfg.channel_code = "regular:2,4";
        cfg.decoder = dec;
        cfg.trials = 5;
        cfg.snr_db = {12.0};
        auto res = run_sweep(cfg);
        CHECK(res.points[0].c.pkts == 5 * cfg.m);
    }
}
