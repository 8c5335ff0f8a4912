#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gancc/girth.hpp"
#include "gancc/harness.hpp"

namespace {

std::string output_dir() {
    const char* env = std::getenv("GANCC_OUTPUT_DIR");
    return env && *env ? env : ".";
}

struct ConfigCli {
    std::optional<std::string> config_path;
    std::vector<std::pair<std::string, std::string>> overrides;

    void attach(CLI::App* app) {
        app->add_option("--config", config_path, "key = value config file");
        auto add = [this, app](const std::string& key, const std::string& help) {
            app->add_option_function<std::string>(
                   "--" + key, [this, key](const std::string& v) { overrides.push_back({key, v}); }, help)
                ->type_name("VALUE");
        };
        add("m", "user count");
        add("packet_len", "packet length N");
        add("info_len", "information bits per packet or 'uncoded'");
        add("ensemble", "ldgm | lt-ldpc | ec-ldgm");
        add("selection", "random | cwc | dpeg");
        add("degree", "packets per check D");
        add("fading", "block | iid");
        add("snr_db", "comma-separated SNR list in dB");
        add("inter_snr_db", "inter-user SNR in dB");
        add("gamma_th", "inter-user outage threshold (linear)");
        add("decoder", "joint | sequential | iterative:g");
        add("bp_iters", "message-passing iterations per stage");
        add("trials", "cooperation rounds per SNR point");
        add("seed", "master seed");
        add("channel_code", "none | regular:wc,wr | file:path");
        add("lifting", "circulant | identity | randperm");
        add("workers", "worker threads (0 = hardware)");
        add("min_bit_errors", "per-point early stop (0 = off)");
        add("psi_variant", "a | b | exact");
        add("de_samples", "fading draws per DE point");
        add("de_iters", "DE iterations (0 = bp_iters)");
    }

    gancc::SimConfig resolve() const {
        gancc::SimConfig cfg;
        if (config_path) cfg = gancc::load_config_file(*config_path);
        for (const auto& [k, v] : overrides) gancc::apply_config_line(cfg, k, v);
        return cfg;
    }
};

void write_text(const std::string& path, const std::string& body) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << body;
}

int cmd_construct(const gancc::SimConfig& cfg, const std::string& out_prefix) {
    if (!cfg.seed_set) throw std::invalid_argument("construct: --seed is required");
    gancc::Rng rng_topo = gancc::make_rng(cfg.seed, {1, 0, 0});
    auto topo = gancc::sample_topology(cfg.m, std::pow(10.0, cfg.inter_snr_db / 10.0), cfg.gamma_th, rng_topo);
    gancc::Rng rng_sel = gancc::make_rng(cfg.seed, {2, 0, 0});
    auto selections = gancc::run_selection_round(topo, cfg.selection_mode(), cfg.selection_rule(),
                                                 cfg.degree, rng_sel);
    auto base = gancc::assemble_base(selections, cfg.m);

    const std::string alist_path = out_prefix + "base.alist";
    gancc::write_alist_file(alist_path, base.to_parity_matrix());
    std::string headers;
    for (const auto& sel : selections) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "0x%llx\n",
                      static_cast<unsigned long long>(gancc::header_encode(sel, cfg.m)));
        headers += buf;
    }
    const std::string header_path = out_prefix + "headers.txt";
    write_text(header_path, headers);
    std::cout << "wrote " << alist_path << " and " << header_path << "\n";
    return 0;
}

int cmd_girth(const std::string& path) {
    auto h = gancc::read_alist_file(path);
    auto g = gancc::girth(h);
    if (g) std::cout << *g << "\n";
    else std::cout << "acyclic\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant network-channel code laboratory"};
    app.require_subcommand(1);

    ConfigCli construct_cfg, sim_cfg, de_cfg, cmp_cfg;
    std::string out_path, girth_in;

    auto* construct = app.add_subcommand("construct", "build one base matrix and its headers");
    construct_cfg.attach(construct);
    construct->add_option("--out", out_path, "output prefix (default $GANCC_OUTPUT_DIR/)");

    auto* girth_cmd = app.add_subcommand("girth", "exact Tanner-graph girth of an alist matrix");
    girth_cmd->add_option("--in", girth_in, "alist file")->required();

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo BER/PER sweep, CSV output");
    sim_cfg.attach(simulate);
    std::string sim_out;
    simulate->add_option("--out", sim_out, "CSV path (default stdout)");

    auto* de_cmd = app.add_subcommand("de", "density-evolution prediction, CSV output");
    de_cfg.attach(de_cmd);
    std::string de_out;
    de_cmd->add_option("--out", de_out, "CSV path (default stdout)");

    auto* compare = app.add_subcommand("compare", "simulation vs density evolution on one grid");
    cmp_cfg.attach(compare);
    std::string cmp_out;
    compare->add_option("--out", cmp_out, "CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            auto cfg = construct_cfg.resolve();
            if (cfg.snr_db.empty()) cfg.snr_db = {0.0}; // construction does not sweep
            cfg.validate();
            std::string prefix = out_path.empty() ? output_dir() + "/" : out_path;
            return cmd_construct(cfg, prefix);
        }
        if (girth_cmd->parsed()) return cmd_girth(girth_in);
        if (simulate->parsed()) {
            auto cfg = sim_cfg.resolve();
            cfg.validate();
            if (!cfg.seed_set) throw std::invalid_argument("simulate: --seed is required");
            auto result = gancc::run_sweep(cfg);
            if (sim_out.empty()) std::cout << result.csv();
            else write_text(sim_out, result.csv());
            return 0;
        }
        if (de_cmd->parsed()) {
            auto cfg = de_cfg.resolve();
            if (!cfg.seed_set) cfg.seed = 1, cfg.seed_set = true; // DE is quadrature plus pinned draws
            cfg.validate();
            auto pts = gancc::run_de(cfg);
            std::string body = "ensemble,D,m,snr_db,samples,iterations,p_e\n";
            for (const auto& p : pts) {
                char buf[160];
                std::snprintf(buf, sizeof buf, "%s,%d,%d,%.10g,%d,%d,%.10g\n", cfg.ensemble.c_str(),
                              cfg.degree, cfg.m, p.snr_db, cfg.de_samples,
                              cfg.de_iters > 0 ? cfg.de_iters : cfg.bp_iters, p.pe);
                body += buf;
            }
            if (de_out.empty()) std::cout << body;
            else write_text(de_out, body);
            return 0;
        }
        if (compare->parsed()) {
            auto cfg = cmp_cfg.resolve();
            cfg.validate();
            if (!cfg.seed_set) throw std::invalid_argument("compare: --seed is required");
            auto result = gancc::compare_de(cfg);
            if (cmp_out.empty()) std::cout << result.csv();
            else write_text(cmp_out, result.csv());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
