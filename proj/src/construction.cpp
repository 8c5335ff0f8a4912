#include "gancc/construction.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <queue>
#include <stdexcept>

namespace gancc {

Topology sample_topology(int m, double inter_snr, double gamma_th, Rng& rng) {
    if (m < 2) throw std::invalid_argument("sample_topology: m must be >= 2");
    if (inter_snr < 0 || gamma_th < 0) throw std::invalid_argument("sample_topology: negative SNR or threshold");
    const double p_up = inter_snr > 0 ? std::exp(-gamma_th / inter_snr) : (gamma_th == 0 ? 1.0 : 0.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Topology t;
    t.m = m;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            if (a == b) continue;
            if (u(rng) < p_up) t.links.insert({a, b});
        }
    return t;
}

Topology sample_topology_bernoulli(int m, double epsilon, Rng& rng) {
    if (m < 2) throw std::invalid_argument("sample_topology: m must be >= 2");
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Topology t;
    t.m = m;
    for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b) {
            if (a == b) continue;
            if (u(rng) >= epsilon) t.links.insert({a, b});
        }
    return t;
}

std::vector<RetrievalSet> build_retrieval_sets(const Topology& topo, SelectionMode mode) {
    const int m = topo.m;
    std::vector<RetrievalSet> sets(m);
    for (int v = 1; v <= m; ++v) {
        auto& rs = sets[v - 1];
        rs.owner = v;
        rs.packets.insert(v);
        for (int u = 1; u <= m; ++u) {
            if (u == v || !topo.has(u, v)) continue;
            rs.packets.insert(u);
            // relays transmit in index order, so v still hears u's relay
            // packet before its own turn iff u < v
            if (mode == SelectionMode::LT && u < v) rs.packets.insert(m + u);
        }
    }
    return sets;
}

CheckSelection select_random(const RetrievalSet& rs, int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("select_random: d must be >= 1");
    if (rs.packets.empty()) throw std::invalid_argument("select_random: empty retrieval set");
    std::vector<int> pool(rs.packets.begin(), rs.packets.end());
    const std::size_t k = std::min<std::size_t>(d, pool.size());
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + std::uniform_int_distribution<std::size_t>(0, pool.size() - 1 - i)(rng);
        std::swap(pool[i], pool[j]);
    }
    CheckSelection sel;
    sel.relay = rs.owner;
    sel.selected.insert(pool.begin(), pool.begin() + k);
    return sel;
}

CheckSelection select_cwc(const RetrievalSet& rs, const ProtectionCounts& counts, int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("select_cwc: d must be >= 1");
    if (rs.packets.empty()) throw std::invalid_argument("select_cwc: empty retrieval set");
    const std::size_t k = std::min<std::size_t>(d, rs.packets.size());

    std::map<int, std::vector<int>> by_count;
    for (int p : rs.packets) {
        auto it = counts.find(p);
        by_count[it == counts.end() ? 0 : it->second].push_back(p);
    }

    CheckSelection sel;
    sel.relay = rs.owner;
    for (auto& [cnt, group] : by_count) {
        std::size_t need = k - sel.selected.size();
        if (need == 0) break;
        if (group.size() <= need) {
            sel.selected.insert(group.begin(), group.end());
        } else {
            // boundary group: ties broken uniformly at random
            for (std::size_t i = 0; i < need; ++i) {
                std::size_t j = i + std::uniform_int_distribution<std::size_t>(0, group.size() - 1 - i)(rng);
                std::swap(group[i], group[j]);
            }
            sel.selected.insert(group.begin(), group.begin() + need);
        }
    }
    return sel;
}

BitmapHeader header_encode(const CheckSelection& sel, int m) {
    if (2 * m > 64) throw std::invalid_argument("header_encode: mask limited to 64 bits");
    BitmapHeader mask = 0;
    for (int p : sel.selected) {
        if (p < 1 || p > 2 * m) throw std::invalid_argument("header_encode: packet index outside [1, 2m]");
        if (p == m + sel.relay) continue; // self-parity is implicit
        mask |= 1ULL << (p - 1);
    }
    return mask;
}

std::set<int> header_decode(BitmapHeader mask, int m) {
    if (2 * m > 64) throw std::invalid_argument("header_decode: mask limited to 64 bits");
    if (m < 32 && (mask >> (2 * m)) != 0)
        throw std::invalid_argument("header_decode: set bit outside [1, 2m]");
    std::set<int> out;
    for (int p = 1; p <= 2 * m; ++p)
        if (mask & (1ULL << (p - 1))) out.insert(p);
    return out;
}

BaseMatrix assemble_base(const std::vector<CheckSelection>& selections, int m) {
    if (static_cast<int>(selections.size()) != m)
        throw std::invalid_argument("assemble_base: need one selection per relay");
    BaseMatrix base = BaseMatrix::diagonal(m);
    for (int r = 0; r < m; ++r) {
        const auto& sel = selections[r];
        for (int p : sel.selected) {
            if (p < 1 || p > 2 * m) throw std::invalid_argument("assemble_base: packet index outside [1, 2m]");
            if (p > m && p - m > r) throw std::invalid_argument("assemble_base: forward LT reference");
            base.entries.insert({r, p - 1});
        }
    }
    return base;
}

namespace {

// Local code-graph view a relay accumulates from overheard headers.
struct LocalGraph {
    int n_cols;
    std::vector<std::vector<int>> check_cols; // check row -> columns
    std::vector<std::vector<int>> col_checks; // column -> check rows
    std::vector<int> col_degree;

    explicit LocalGraph(int cols) : n_cols(cols), col_checks(cols), col_degree(cols, 0) {}

    void add_check(const std::vector<int>& cols) {
        int id = static_cast<int>(check_cols.size());
        check_cols.push_back(cols);
        for (int c : cols) {
            col_checks[c].push_back(id);
            ++col_degree[c];
        }
    }
    void add_edge(int check, int c) {
        check_cols[check].push_back(c);
        col_checks[c].push_back(check);
        ++col_degree[c];
    }
};

} // namespace

BaseMatrix dpeg_construct(int m, const Topology& topo, const std::vector<RetrievalSet>& sets,
                          const std::vector<int>& check_degree, Rng& rng) {
    if (static_cast<int>(sets.size()) != m || static_cast<int>(check_degree.size()) != m)
        throw std::invalid_argument("dpeg_construct: need m retrieval sets and m degrees");
    (void)rng; // tie-breaking is lowest degree then lowest index, so the
               // trace is already deterministic

    std::vector<CheckSelection> selections(m);
    // finished checks, kept as column lists for building each relay's view
    std::vector<std::vector<int>> final_checks(m);

    for (int j = 0; j < m; ++j) {
        // view: checks of earlier relays whose headers this relay heard
        LocalGraph g(2 * m);
        std::vector<int> my_check_ids;
        for (int u = 0; u < j; ++u)
            if (topo.has(u + 1, j + 1)) g.add_check(final_checks[u]);
        const int own = static_cast<int>(g.check_cols.size());
        g.add_check({m + j}); // self-parity participates from the start

        std::vector<int> candidates;
        for (int p : sets[j].packets) candidates.push_back(p - 1);
        std::sort(candidates.begin(), candidates.end());

        const int want = std::min<int>(check_degree[j], static_cast<int>(candidates.size()));
        std::vector<char> attached(2 * m, 0);

        for (int k = 0; k < want; ++k) {
            int pick = -1;
            if (k == 0) {
                for (int c : candidates)
                    if (pick < 0 || g.col_degree[c] < g.col_degree[pick]) pick = c;
            } else {
                // BFS levels from this check; complement = candidates not yet
                // reached (and not already attached, which depth 1 covers)
                std::vector<char> var_seen(2 * m, 0), chk_seen(g.check_cols.size(), 0);
                chk_seen[own] = 1;
                std::vector<int> frontier_vars = g.check_cols[own];
                for (int c : frontier_vars) var_seen[c] = 1;

                auto complement = [&]() {
                    std::vector<int> out;
                    for (int c : candidates)
                        if (!var_seen[c] && !attached[c]) out.push_back(c);
                    return out;
                };

                std::vector<int> cur = complement();
                while (!cur.empty()) {
                    // expand one level: vars -> their checks -> new vars
                    std::vector<int> next_vars;
                    for (int v : frontier_vars) {
                        for (int ck : g.col_checks[v]) {
                            if (chk_seen[ck]) continue;
                            chk_seen[ck] = 1;
                            for (int w : g.check_cols[ck]) {
                                if (var_seen[w]) continue;
                                var_seen[w] = 1;
                                next_vars.push_back(w);
                            }
                        }
                    }
                    if (next_vars.empty()) break; // saturated short of covering all
                    std::vector<int> nxt = complement();
                    if (nxt.empty()) break; // next level would cover everything
                    frontier_vars = std::move(next_vars);
                    cur = std::move(nxt);
                }
                for (int c : cur)
                    if (pick < 0 || g.col_degree[c] < g.col_degree[pick]) pick = c;
            }
            if (pick < 0) {
                std::cerr << "dpeg: relay " << j + 1 << " short of candidates, check degree reduced\n";
                break;
            }
            attached[pick] = 1;
            g.add_edge(own, pick);
            if (pick != m + j) selections[j].selected.insert(pick + 1);
        }
        selections[j].relay = j + 1;
        final_checks[j] = g.check_cols[own];
    }

    return assemble_base(selections, m);
}

std::vector<CheckSelection> run_selection_round(const Topology& topo, SelectionMode mode,
                                                SelectionRule rule, int degree, Rng& rng) {
    const int m = topo.m;
    auto sets = build_retrieval_sets(topo, mode);

    if (rule == SelectionRule::Dpeg) {
        std::vector<int> degs(m, degree);
        BaseMatrix base = dpeg_construct(m, topo, sets, degs, rng);
        std::vector<CheckSelection> out(m);
        for (int r = 0; r < m; ++r) {
            out[r].relay = r + 1;
            for (const auto& [br, bc] : base.entries)
                if (br == r && !base.is_self_parity(br, bc)) out[r].selected.insert(bc + 1);
        }
        return out;
    }

    std::vector<CheckSelection> out(m);
    // one local protection view per user (CWC)
    std::vector<ProtectionCounts> views(m);
    for (int r = 1; r <= m; ++r) {
        const auto& rs = sets[r - 1];
        out[r - 1] = rule == SelectionRule::Cwc ? select_cwc(rs, views[r - 1], degree, rng)
                                                : select_random(rs, degree, rng);
        // header broadcast: every user that hears this relay (and the relay
        // itself) updates its view, self-parity participation included
        for (int v = 1; v <= m; ++v) {
            if (v != r && !topo.has(r, v)) continue;
            for (int p : out[r - 1].selected) ++views[v - 1][p];
            ++views[v - 1][m + r];
        }
    }
    return out;
}

} // namespace gancc
