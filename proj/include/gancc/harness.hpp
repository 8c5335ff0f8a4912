#ifndef GANCC_HARNESS_HPP
#define GANCC_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gancc/construction.hpp"
#include "gancc/decoder.hpp"
#include "gancc/density_evolution.hpp"
#include "gancc/encode.hpp"

namespace gancc {

struct SimConfig {
    int m = 5;
    int packet_len = 1000;              // N
    std::string info_len = "uncoded";   // "uncoded" or a bit count (validated against channel_code)
    std::string ensemble = "lt-ldpc";   // ldgm | lt-ldpc | ec-ldgm
    std::string selection = "cwc";      // random | cwc | dpeg
    int degree = 3;                     // D, target packets per check
    std::string fading = "block";       // block | iid
    std::vector<double> snr_db;
    double inter_snr_db = 15.0;
    double gamma_th = 1.0;
    std::string decoder = "joint";      // joint | sequential | iterative:g
    int bp_iters = 30;
    long trials = 1000;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string channel_code = "none";  // none | regular:wc,wr | file:path
    // extensions beyond the core parameter set
    std::string lifting = "circulant";  // circulant | identity | randperm
    int workers = 0;                    // 0 = hardware concurrency
    long min_bit_errors = 0;            // per-point early stop, 0 = off
    std::string psi_variant = "b";      // a | b | exact (density evolution)
    int de_samples = 2000;              // fading draws per DE point
    int de_iters = 0;                   // 0 = bp_iters

    void validate() const;

    EnsembleKind ensemble_kind() const;
    SelectionMode selection_mode() const;
    SelectionRule selection_rule() const;
    FadingKind fading_kind() const;
    de::PsiVariant psi() const;
    // decoder spec: kind + global rounds
    enum class DecoderKind { Joint, Sequential, Iterative };
    DecoderKind decoder_kind() const;
    int global_rounds() const;
};

// line-oriented "key = value" text; '#' starts a comment
SimConfig load_config_file(const std::string& path);
void apply_config_line(SimConfig& cfg, const std::string& key, const std::string& value);

struct Counters {
    long long bit_errors = 0;
    long long bits = 0;
    long long pkt_errors = 0;
    long long pkts = 0;
    Counters& operator+=(const Counters& o);
};

struct SimPoint {
    double snr_db = 0;
    long trials = 0;
    Counters c;
    double ber() const { return c.bits ? static_cast<double>(c.bit_errors) / c.bits : 0.0; }
    double per() const { return c.pkts ? static_cast<double>(c.pkt_errors) / c.pkts : 0.0; }
};

struct SimResult {
    SimConfig cfg;
    std::vector<SimPoint> points;
    std::string csv() const; // schema-stable body incl. header line
};

// Shared per-sweep state: channel code specs (one per user, null when
// uncoded), built once and reused across trials.
struct SweepContext {
    std::vector<std::shared_ptr<ChannelCodeSpec>> specs;
    static SweepContext build(const SimConfig& cfg);
    std::vector<const ChannelCodeSpec*> spec_ptrs() const;
    std::vector<const ParityMatrix*> channel_h() const;
    long long info_bits_per_trial() const;
};

// One full cooperation round at one SNR: construct, lift, encode, transmit,
// decode, count information-bit and packet errors.
Counters run_trial(const SimConfig& cfg, const SweepContext& ctx, double snr_db, int snr_idx,
                   long trial);

// trials x snr grid with deterministic block-wise aggregation: the result
// is independent of the worker count
SimResult run_sweep(const SimConfig& cfg);

struct DePoint {
    double snr_db = 0;
    double pe = 0;
};
std::vector<DePoint> run_de(const SimConfig& cfg);

struct ComparePoint {
    double snr_db = 0;
    double sim_ber = 0;
    double de_pe = 0;
};
struct CompareResult {
    SimConfig cfg;
    std::vector<ComparePoint> points;
    std::string csv() const;
};
CompareResult compare_de(const SimConfig& cfg);

// indices processed in chunks by a small thread pool; fn(index, worker)
void parallel_for(long begin, long end, int workers, const std::function<void(long, int)>& fn);

// log-domain horizontal crossing: the SNR where the (snr, value) curve
// crosses `level`, linearly interpolated in (snr, log10 value); NaN when
// the curve never crosses.
double crossing_snr(const std::vector<std::pair<double, double>>& curve, double level);

} // namespace gancc

#endif
