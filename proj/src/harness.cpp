#include "gancc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gancc {

namespace {

// seed-path tags for the independent random streams of one trial
enum SeedTag : std::uint64_t {
    kTagTopology = 1,
    kTagSelection = 2,
    kTagLift = 3,
    kTagData = 4,
    kTagChannel = 5,
    kTagChanCode = 6,
    kTagDe = 7
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

void SimConfig::validate() const {
    if (m < 2) throw std::invalid_argument("config: m must be >= 2");
    if (packet_len < 1) throw std::invalid_argument("config: packet_len must be >= 1");
    if (degree < 1) throw std::invalid_argument("config: degree must be >= 1");
    if (bp_iters < 1) throw std::invalid_argument("config: bp_iters must be >= 1");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (snr_db.empty()) throw std::invalid_argument("config: snr_db list must be nonempty");
    ensemble_kind();
    selection_rule();
    fading_kind();
    decoder_kind();
    psi();
    if (lifting != "circulant" && lifting != "identity" && lifting != "randperm")
        throw std::invalid_argument("config: lifting must be circulant|identity|randperm");
    if (channel_code != "none" && ensemble_kind() == EnsembleKind::EcLdgm)
        throw std::invalid_argument("config: EC-LDGM runs uncoded packets only");
    if (info_len != "uncoded") {
        if (channel_code == "none") throw std::invalid_argument("config: info_len set but channel_code=none");
        (void)std::stol(info_len);
    }
}

EnsembleKind SimConfig::ensemble_kind() const {
    if (ensemble == "ldgm") return EnsembleKind::LDGM;
    if (ensemble == "lt-ldpc") return EnsembleKind::LtLdpc;
    if (ensemble == "ec-ldgm") return EnsembleKind::EcLdgm;
    throw std::invalid_argument("config: ensemble must be ldgm|lt-ldpc|ec-ldgm");
}

SelectionMode SimConfig::selection_mode() const {
    return ensemble_kind() == EnsembleKind::LtLdpc ? SelectionMode::LT : SelectionMode::LDGM;
}

SelectionRule SimConfig::selection_rule() const {
    if (selection == "random") return SelectionRule::Random;
    if (selection == "cwc") return SelectionRule::Cwc;
    if (selection == "dpeg") return SelectionRule::Dpeg;
    throw std::invalid_argument("config: selection must be random|cwc|dpeg");
}

FadingKind SimConfig::fading_kind() const {
    if (fading == "block") return FadingKind::Block;
    if (fading == "iid") return FadingKind::Iid;
    throw std::invalid_argument("config: fading must be block|iid");
}

de::PsiVariant SimConfig::psi() const {
    if (psi_variant == "a") return de::PsiVariant::ApproxA;
    if (psi_variant == "b") return de::PsiVariant::ApproxB;
    if (psi_variant == "exact") return de::PsiVariant::Exact;
    throw std::invalid_argument("config: psi_variant must be a|b|exact");
}

SimConfig::DecoderKind SimConfig::decoder_kind() const {
    if (decoder == "joint") return DecoderKind::Joint;
    if (decoder == "sequential") return DecoderKind::Sequential;
    if (decoder.rfind("iterative:", 0) == 0) return DecoderKind::Iterative;
    throw std::invalid_argument("config: decoder must be joint|sequential|iterative:g");
}

int SimConfig::global_rounds() const {
    if (decoder_kind() != DecoderKind::Iterative) return 0;
    return std::stoi(decoder.substr(std::string("iterative:").size()));
}

void apply_config_line(SimConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "m") cfg.m = std::stoi(value);
    else if (key == "packet_len") cfg.packet_len = std::stoi(value);
    else if (key == "info_len") cfg.info_len = value;
    else if (key == "ensemble") cfg.ensemble = value;
    else if (key == "selection") cfg.selection = value;
    else if (key == "degree") cfg.degree = std::stoi(value);
    else if (key == "fading") cfg.fading = value;
    else if (key == "snr_db") {
        cfg.snr_db.clear();
        for (const auto& tok : split(value, ','))
            if (!trim(tok).empty()) cfg.snr_db.push_back(std::stod(trim(tok)));
    } else if (key == "inter_snr_db") cfg.inter_snr_db = std::stod(value);
    else if (key == "gamma_th") cfg.gamma_th = std::stod(value);
    else if (key == "decoder") cfg.decoder = value;
    else if (key == "bp_iters") cfg.bp_iters = std::stoi(value);
    else if (key == "trials") cfg.trials = std::stol(value);
    else if (key == "seed") {
        cfg.seed = std::stoull(value);
        cfg.seed_set = true;
    } else if (key == "channel_code") cfg.channel_code = value;
    else if (key == "lifting") cfg.lifting = value;
    else if (key == "workers") cfg.workers = std::stoi(value);
    else if (key == "min_bit_errors") cfg.min_bit_errors = std::stol(value);
    else if (key == "psi_variant") cfg.psi_variant = value;
    else if (key == "de_samples") cfg.de_samples = std::stoi(value);
    else if (key == "de_iters") cfg.de_iters = std::stoi(value);
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

SimConfig load_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("config: cannot open " + path);
    SimConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config: line " + std::to_string(lineno) + " is not 'key = value'");
        apply_config_line(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

Counters& Counters::operator+=(const Counters& o) {
    bit_errors += o.bit_errors;
    bits += o.bits;
    pkt_errors += o.pkt_errors;
    pkts += o.pkts;
    return *this;
}

SweepContext SweepContext::build(const SimConfig& cfg) {
    SweepContext ctx;
    ctx.specs.assign(cfg.m, nullptr);
    if (cfg.channel_code == "none") return ctx;
    if (cfg.channel_code.rfind("regular:", 0) == 0) {
        auto parts = split(cfg.channel_code.substr(8), ',');
        if (parts.size() != 2) throw std::invalid_argument("config: channel_code regular:wc,wr");
        int wc = std::stoi(parts[0]), wr = std::stoi(parts[1]);
        for (int u = 0; u < cfg.m; ++u) {
            auto h = generate_regular_ldpc(cfg.packet_len, wc, wr,
                                           derive_seed(cfg.seed, {kTagChanCode, static_cast<std::uint64_t>(u)}));
            ctx.specs[u] = std::make_shared<ChannelCodeSpec>(std::move(h));
        }
    } else if (cfg.channel_code.rfind("file:", 0) == 0) {
        auto h = read_alist_file(cfg.channel_code.substr(5));
        if (h.cols() != cfg.packet_len) throw std::invalid_argument("config: channel code length != packet_len");
        auto spec = std::make_shared<ChannelCodeSpec>(std::move(h));
        for (int u = 0; u < cfg.m; ++u) ctx.specs[u] = spec;
    } else {
        throw std::invalid_argument("config: channel_code must be none|regular:wc,wr|file:path");
    }
    return ctx;
}

std::vector<const ChannelCodeSpec*> SweepContext::spec_ptrs() const {
    std::vector<const ChannelCodeSpec*> out;
    for (const auto& s : specs) out.push_back(s.get());
    return out;
}

std::vector<const ParityMatrix*> SweepContext::channel_h() const {
    std::vector<const ParityMatrix*> out;
    for (const auto& s : specs) out.push_back(s ? &s->h : nullptr);
    return out;
}

long long SweepContext::info_bits_per_trial() const {
    long long bits = 0;
    for (const auto& s : specs) bits += s ? s->k() : 0;
    return bits;
}

Counters run_trial(const SimConfig& cfg, const SweepContext& ctx, double snr_db, int snr_idx,
                   long trial) {
    const int m = cfg.m;
    const int n = cfg.packet_len;
    const EnsembleKind kind = cfg.ensemble_kind();
    const std::uint64_t t = static_cast<std::uint64_t>(trial);
    const std::uint64_t s = static_cast<std::uint64_t>(snr_idx);

    // construction phase
    Rng rng_topo = make_rng(cfg.seed, {kTagTopology, s, t});
    Topology topo = sample_topology(m, std::pow(10.0, cfg.inter_snr_db / 10.0), cfg.gamma_th, rng_topo);
    Rng rng_sel = make_rng(cfg.seed, {kTagSelection, s, t});
    auto selections = run_selection_round(topo, cfg.selection_mode(), cfg.selection_rule(), cfg.degree, rng_sel);
    BaseMatrix base = assemble_base(selections, m);

    ParityMatrix lifted;
    if (cfg.lifting == "randperm") {
        Rng rng_lift = make_rng(cfg.seed, {kTagLift, s, t});
        lifted = lift_random_permutations(base, n, kind, rng_lift);
    } else {
        OffsetTable offsets = cfg.lifting == "identity" ? make_identity_offsets(base)
                                                        : make_offset_table(base, n);
        lifted = lift(base, n, kind, offsets);
    }

    // user data
    Rng rng_data = make_rng(cfg.seed, {kTagData, s, t});
    std::vector<BitVec> info(m), sources(m);
    for (int u = 0; u < m; ++u) {
        if (ctx.specs[u]) {
            info[u] = random_bits(ctx.specs[u]->k(), rng_data);
            sources[u] = ctx.specs[u]->encoder.encode(info[u]);
        } else {
            info[u] = random_bits(n, rng_data);
            sources[u] = info[u];
        }
    }
    auto relays = encode_from_lifted(lifted, m, n, sources);

    BitVec word(2 * m * n);
    for (int u = 0; u < m; ++u)
        for (int k = 0; k < n; ++k) {
            word[u * n + k] = sources[u][k];
            word[(m + u) * n + k] = relays[u][k];
        }

    // transmission
    const double n0 = std::pow(10.0, -snr_db / 10.0);
    Rng rng_ch = make_rng(cfg.seed, {kTagChannel, s, t});
    auto ch = sample_fading(cfg.fading_kind(), m, 2 * m * n, n0, rng_ch);
    auto y = apply_channel(bpsk_modulate(word), ch, n, rng_ch);
    auto llr = llr_demap(y, ch, n);

    // decoding
    DecodeResult res;
    switch (cfg.decoder_kind()) {
        case SimConfig::DecoderKind::Joint: {
            ParityMatrix unified = embed_channel_codes(lifted, m, n, ctx.channel_h());
            res = decode_joint(unified, llr, cfg.bp_iters);
            break;
        }
        case SimConfig::DecoderKind::Sequential:
            res = decode_sequential(lifted, m, n, ctx.spec_ptrs(), llr, cfg.bp_iters, cfg.bp_iters);
            break;
        case SimConfig::DecoderKind::Iterative:
            res = decode_iterative_global(lifted, m, n, ctx.spec_ptrs(), llr, cfg.bp_iters, cfg.bp_iters,
                                          cfg.global_rounds());
            break;
    }

    // information-bit accounting
    Counters c;
    for (int u = 0; u < m; ++u) {
        long long errs = 0;
        if (ctx.specs[u]) {
            const auto& cols = ctx.specs[u]->encoder.info_cols();
            for (std::size_t i = 0; i < cols.size(); ++i)
                errs += res.hard[u * n + cols[i]] != info[u][i];
            c.bits += static_cast<long long>(cols.size());
        } else {
            for (int k = 0; k < n; ++k) errs += res.hard[u * n + k] != info[u][k];
            c.bits += n;
        }
        c.bit_errors += errs;
        c.pkt_errors += errs > 0;
        c.pkts += 1;
    }
    return c;
}

void parallel_for(long begin, long end, int workers, const std::function<void(long, int)>& fn) {
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (end - begin <= 1 || workers == 1) {
        for (long i = begin; i < end; ++i) fn(i, 0);
        return;
    }
    std::atomic<long> next(begin);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (;;) {
                long i = next.fetch_add(1);
                if (i >= end) break;
                fn(i, w);
            }
        });
    }
    for (auto& th : pool) th.join();
}

SimResult run_sweep(const SimConfig& cfg) {
    cfg.validate();
    if (!cfg.seed_set) throw std::invalid_argument("config: seed is required for simulation");
    SweepContext ctx = SweepContext::build(cfg);
    int workers = cfg.workers > 0 ? cfg.workers : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    SimResult result;
    result.cfg = cfg;
    const long block = 256;
    for (std::size_t si = 0; si < cfg.snr_db.size(); ++si) {
        SimPoint pt;
        pt.snr_db = cfg.snr_db[si];
        for (long start = 0; start < cfg.trials; start += block) {
            const long stop = std::min(cfg.trials, start + block);
            std::vector<Counters> local(workers);
            parallel_for(start, stop, workers, [&](long trial, int w) {
                local[w] += run_trial(cfg, ctx, pt.snr_db, static_cast<int>(si), trial);
            });
            for (const auto& l : local) pt.c += l;
            pt.trials = stop;
            if (cfg.min_bit_errors > 0 && pt.c.bit_errors >= cfg.min_bit_errors) break;
        }
        result.points.push_back(pt);
    }
    return result;
}

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string scheme_label(const SimConfig& cfg) {
    if (cfg.lifting == "identity") return "ancc";
    if (cfg.lifting == "randperm") return "gancc-randperm";
    return "gancc";
}

} // namespace

std::string SimResult::csv() const {
    std::ostringstream os;
    os << "scheme,ensemble,selection,decoder,m,N,snr_db,trials,bit_errors,bits,ber,pkt_errors,pkts,per\n";
    for (const auto& p : points) {
        os << scheme_label(cfg) << ',' << cfg.ensemble << ',' << cfg.selection << ',' << cfg.decoder << ','
           << cfg.m << ',' << cfg.packet_len << ',' << fmt_double(p.snr_db) << ',' << p.trials << ','
           << p.c.bit_errors << ',' << p.c.bits << ',' << fmt_double(p.ber()) << ',' << p.c.pkt_errors
           << ',' << p.c.pkts << ',' << fmt_double(p.per()) << '\n';
    }
    return os.str();
}

std::vector<DePoint> run_de(const SimConfig& cfg) {
    de::DeEnsemble ens;
    switch (cfg.ensemble_kind()) {
        case EnsembleKind::LDGM: ens = de::DeEnsemble::Ldgm; break;
        case EnsembleKind::LtLdpc: ens = de::DeEnsemble::LtLdpc; break;
        case EnsembleKind::EcLdgm: ens = de::DeEnsemble::EcLdgm; break;
        default: throw std::invalid_argument("de: unsupported ensemble");
    }
    const int iters = cfg.de_iters > 0 ? cfg.de_iters : cfg.bp_iters;
    std::vector<DePoint> out;
    for (double snr : cfg.snr_db) {
        double pe = de::fading_average(ens, cfg.degree, snr, cfg.m, cfg.fading_kind(), cfg.de_samples,
                                       iters, cfg.psi(), derive_seed(cfg.seed, {kTagDe}));
        out.push_back({snr, pe});
    }
    return out;
}

CompareResult compare_de(const SimConfig& cfg) {
    if (cfg.channel_code != "none")
        throw std::invalid_argument("compare: density evolution covers uncoded packets only");
    SimResult sim = run_sweep(cfg);
    auto de_pts = run_de(cfg);
    CompareResult out;
    out.cfg = cfg;
    for (std::size_t i = 0; i < sim.points.size(); ++i)
        out.points.push_back({sim.points[i].snr_db, sim.points[i].ber(), de_pts[i].pe});
    return out;
}

std::string CompareResult::csv() const {
    std::ostringstream os;
    os << "ensemble,selection,m,N,D,snr_db,sim_ber,de_pe\n";
    for (const auto& p : points)
        os << cfg.ensemble << ',' << cfg.selection << ',' << cfg.m << ',' << cfg.packet_len << ','
           << cfg.degree << ',' << fmt_double(p.snr_db) << ',' << fmt_double(p.sim_ber) << ','
           << fmt_double(p.de_pe) << '\n';
    return os.str();
}

double crossing_snr(const std::vector<std::pair<double, double>>& curve, double level) {
    const double ll = std::log10(level);
    for (std::size_t i = 1; i < curve.size(); ++i) {
        double y0 = curve[i - 1].second, y1 = curve[i].second;
        if (y0 <= 0 || y1 <= 0) {
            if (y0 > 0 && y0 > level && y1 == 0) return curve[i].first; // fell through the floor
            continue;
        }
        double l0 = std::log10(y0), l1 = std::log10(y1);
        if ((l0 - ll) * (l1 - ll) <= 0 && l0 != l1)
            return curve[i - 1].first +
                   (curve[i].first - curve[i - 1].first) * (l0 - ll) / (l0 - l1);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

} // namespace gancc
