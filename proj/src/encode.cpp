#include "gancc/encode.hpp"

#include <stdexcept>

namespace gancc {

std::vector<BitVec> encode_network(const BaseMatrix& base, const OffsetTable& offsets, int n,
                                   EnsembleKind kind, const std::vector<BitVec>& source_packets) {
    const int m = base.rows;
    if (static_cast<int>(source_packets.size()) != base.systematic_cols)
        throw std::invalid_argument("encode_network: need one packet per source column");
    for (const auto& s : source_packets)
        if (static_cast<int>(s.size()) != n) throw std::invalid_argument("encode_network: packet length mismatch");

    std::vector<BitVec> relays(m);
    for (int r = 0; r < m; ++r) {
        BitVec x(n, 0);
        for (const auto& [br, bc] : base.entries) {
            if (br != r || base.is_self_parity(br, bc)) continue;
            int p = offsets.at(base, br, bc);
            if (bc < base.systematic_cols) {
                xor_shifted(x, source_packets[bc], static_cast<std::size_t>(p));
            } else {
                int u = bc - base.systematic_cols;
                if (u >= r) throw std::invalid_argument("encode_network: forward relay reference");
                if (kind != EnsembleKind::LtLdpc)
                    throw std::invalid_argument("encode_network: relay reference outside LT-LDPC mode");
                xor_shifted(x, relays[u], static_cast<std::size_t>(p));
            }
        }
        relays[r] = kind == EnsembleKind::EcLdgm ? differential_decode(x) : std::move(x);
    }
    return relays;
}

std::vector<BitVec> encode_from_lifted(const ParityMatrix& lifted, int m, int n,
                                       const std::vector<BitVec>& source_packets) {
    if (lifted.rows() != m * n || lifted.cols() != 2 * m * n)
        throw std::invalid_argument("encode_from_lifted: dimension mismatch");
    BitVec word(2 * m * n, 0);
    for (int u = 0; u < m; ++u)
        for (int k = 0; k < n; ++k) word[u * n + k] = source_packets[u][k];

    // Row (r, k) contains relay bit (r, k) exactly once (identity or zigzag
    // diagonal); everything else in the row is already known when rows are
    // processed in order.
    const int sys = m * n;
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k < n; ++k) {
            const int self = sys + r * n + k;
            std::uint8_t acc = 0;
            for (int c : lifted.row(r * n + k)) {
                if (c == self) continue;
                acc ^= word[c];
            }
            word[self] = acc;
        }
    }
    std::vector<BitVec> relays(m, BitVec(n));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k < n; ++k) relays[r][k] = word[sys + r * n + k];
    return relays;
}

ParityMatrix embed_channel_codes(const ParityMatrix& network, int m, int n,
                                 const std::vector<const ParityMatrix*>& channel_h) {
    if (static_cast<int>(channel_h.size()) != m)
        throw std::invalid_argument("embed_channel_codes: need one spec (possibly null) per user");
    if (network.cols() != 2 * m * n) throw std::invalid_argument("embed_channel_codes: column mismatch");

    int chk_rows = 0;
    for (const auto* h : channel_h) {
        if (!h) continue;
        if (h->cols() != n) throw std::invalid_argument("embed_channel_codes: channel code length != N");
        chk_rows += h->rows();
    }

    ParityMatrix out(chk_rows + network.rows(), network.cols());
    int row0 = 0;
    for (int u = 0; u < m; ++u) {
        const auto* h = channel_h[u];
        if (!h) continue;
        for (int r = 0; r < h->rows(); ++r)
            for (int c : h->row(r)) out.add_entry(row0 + r, u * n + c);
        row0 += h->rows();
    }
    for (int r = 0; r < network.rows(); ++r)
        for (int c : network.row(r)) out.add_entry(chk_rows + r, c);
    out.sort_adjacency();
    out.kind = EnsembleKind::Unified;
    return out;
}

} // namespace gancc
