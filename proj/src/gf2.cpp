#include "gancc/gf2.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace gancc {

Gf2Encoder::Gf2Encoder(const ParityMatrix& h) : n_(h.cols()), words_((h.cols() + 63) / 64) {
    // dense bitset copy of H
    std::vector<std::vector<std::uint64_t>> rows(h.rows(), std::vector<std::uint64_t>(words_, 0));
    for (int r = 0; r < h.rows(); ++r)
        for (int c : h.row(r)) rows[r][c >> 6] ^= 1ULL << (c & 63);

    // Gauss-Jordan over GF(2), pivoting column by column
    int pivot_row = 0;
    for (int c = 0; c < n_ && pivot_row < h.rows(); ++c) {
        int sel = -1;
        for (int r = pivot_row; r < h.rows(); ++r) {
            if ((rows[r][c >> 6] >> (c & 63)) & 1ULL) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rows[pivot_row], rows[sel]);
        for (int r = 0; r < h.rows(); ++r) {
            if (r == pivot_row) continue;
            if ((rows[r][c >> 6] >> (c & 63)) & 1ULL)
                for (int w = 0; w < words_; ++w) rows[r][w] ^= rows[pivot_row][w];
        }
        pivot_cols_.push_back(c);
        ++pivot_row;
    }

    reduced_.assign(static_cast<std::size_t>(pivot_row) * words_, 0);
    for (int r = 0; r < pivot_row; ++r)
        std::copy(rows[r].begin(), rows[r].end(), reduced_.begin() + static_cast<std::size_t>(r) * words_);

    std::vector<char> is_pivot(n_, 0);
    for (int c : pivot_cols_) is_pivot[c] = 1;
    for (int c = 0; c < n_; ++c)
        if (!is_pivot[c]) free_cols_.push_back(c);
}

BitVec Gf2Encoder::encode(const BitVec& info) const {
    if (static_cast<int>(info.size()) != k()) throw std::invalid_argument("Gf2Encoder::encode: bad info length");
    std::vector<std::uint64_t> word(words_, 0);
    for (std::size_t i = 0; i < info.size(); ++i)
        if (info[i]) word[free_cols_[i] >> 6] ^= 1ULL << (free_cols_[i] & 63);

    // pivot bit = parity of the reduced row restricted to the free columns
    for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
        const std::uint64_t* row = &reduced_[r * words_];
        std::uint64_t acc = 0;
        for (int w = 0; w < words_; ++w) acc ^= row[w] & word[w];
        int parity = __builtin_popcountll(acc) & 1;
        // the row contains its own pivot bit (currently 0 in word), so the
        // parity accumulated above is exactly the free-column contribution
        if (parity) word[pivot_cols_[r] >> 6] ^= 1ULL << (pivot_cols_[r] & 63);
    }

    BitVec out(n_);
    for (int c = 0; c < n_; ++c) out[c] = static_cast<std::uint8_t>((word[c >> 6] >> (c & 63)) & 1ULL);
    return out;
}

ParityMatrix generate_regular_ldpc(int n, int wc, int wr, std::uint64_t seed) {
    if (n <= 0 || wc <= 0 || wr <= 0) throw std::invalid_argument("generate_regular_ldpc: nonpositive parameter");
    if ((static_cast<long long>(n) * wc) % wr != 0)
        throw std::invalid_argument("generate_regular_ldpc: n*wc not divisible by wr");
    const int m = static_cast<int>(static_cast<long long>(n) * wc / wr);
    if (wc > m) throw std::invalid_argument("generate_regular_ldpc: column weight exceeds row count");

    Rng rng(mix64(seed));
    std::vector<std::vector<int>> chk_vars(m); // rows under construction
    std::vector<std::vector<int>> var_chks(n);
    std::vector<int> chk_deg(m, 0);

    // BFS distance from variable v to every check in the graph built so
    // far; -1 = unreachable. Edges to the farthest checks close the
    // longest cycles (a distance-3 check would close a 4-cycle).
    std::vector<int> chk_dist(m), var_seen(n);
    auto bfs_distances = [&](int v) {
        std::fill(chk_dist.begin(), chk_dist.end(), -1);
        std::fill(var_seen.begin(), var_seen.end(), 0);
        std::vector<int> frontier = {v};
        var_seen[v] = 1;
        int depth = 1;
        while (!frontier.empty()) {
            std::vector<int> next_vars;
            for (int u : frontier) {
                for (int c : var_chks[u]) {
                    if (chk_dist[c] >= 0) continue;
                    chk_dist[c] = depth;
                    for (int w : chk_vars[c]) {
                        if (var_seen[w]) continue;
                        var_seen[w] = 1;
                        next_vars.push_back(w);
                    }
                }
            }
            frontier = std::move(next_vars);
            depth += 2;
        }
    };

    std::vector<int> ties;
    for (int v = 0; v < n; ++v) {
        for (int e = 0; e < wc; ++e) {
            long best_dist = -1; // unreachable ranks above any finite distance
            int best_deg = wr + 1;
            ties.clear();
            if (e > 0) bfs_distances(v);
            for (int c = 0; c < m; ++c) {
                if (chk_deg[c] >= wr) continue;
                long dist;
                if (e == 0) dist = std::numeric_limits<long>::max();
                else if (chk_dist[c] < 0) dist = std::numeric_limits<long>::max();
                else if (chk_dist[c] == 1) continue; // already adjacent
                else dist = chk_dist[c];
                if (dist > best_dist || (dist == best_dist && chk_deg[c] < best_deg)) {
                    best_dist = dist;
                    best_deg = chk_deg[c];
                    ties.clear();
                    ties.push_back(c);
                } else if (dist == best_dist && chk_deg[c] == best_deg) {
                    ties.push_back(c);
                }
            }
            if (ties.empty()) throw std::runtime_error("generate_regular_ldpc: no placement available");
            int pick = ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];
            chk_vars[pick].push_back(v);
            var_chks[v].push_back(pick);
            ++chk_deg[pick];
        }
    }

    ParityMatrix h(m, n);
    for (int c = 0; c < m; ++c)
        for (int v : chk_vars[c]) h.add_entry(c, v);
    h.sort_adjacency();
    return h;
}

} // namespace gancc
