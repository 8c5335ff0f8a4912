#include "gancc/base_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gancc {

BaseMatrix BaseMatrix::diagonal(int m) {
    BaseMatrix b;
    b.rows = m;
    b.cols = 2 * m;
    b.systematic_cols = m;
    for (int r = 0; r < m; ++r) b.entries.insert({r, m + r});
    return b;
}

bool BaseMatrix::parity_region_is_diagonal() const {
    for (const auto& [r, c] : entries)
        if (c >= systematic_cols && c != systematic_cols + r) return false;
    return true;
}

bool BaseMatrix::parity_region_is_lower_triangular() const {
    for (const auto& [r, c] : entries)
        if (c >= systematic_cols && c > systematic_cols + r) return false;
    return true;
}

ParityMatrix BaseMatrix::to_parity_matrix() const {
    ParityMatrix h(rows, cols);
    for (const auto& [r, c] : entries) h.add_entry(r, c);
    h.sort_adjacency();
    return h;
}

int OffsetTable::at(const BaseMatrix& base, int r, int c) const {
    auto it = p.find({r, c});
    if (it != p.end()) return it->second;
    if (base.is_self_parity(r, c)) return 0;
    throw std::invalid_argument("OffsetTable: missing offset for nonzero entry");
}

int offset_scheme(int i, int j, int n) {
    if (n < 1) throw std::invalid_argument("offset_scheme: N must be >= 1");
    if (i < 0 || j < 0) throw std::invalid_argument("offset_scheme: negative index");
    return static_cast<int>((static_cast<long long>(i) * j) % n);
}

OffsetTable make_offset_table(const BaseMatrix& base, int n) {
    OffsetTable t;
    for (const auto& [r, c] : base.entries)
        if (!base.is_self_parity(r, c)) t.p[{r, c}] = offset_scheme(r, c, n);
    return t;
}

OffsetTable make_identity_offsets(const BaseMatrix& base) {
    OffsetTable t;
    for (const auto& [r, c] : base.entries)
        if (!base.is_self_parity(r, c)) t.p[{r, c}] = 0;
    return t;
}

namespace {

ParityMatrix lift_blocks(const BaseMatrix& base, int n,
                         const std::map<std::pair<int, int>, CirculantBlock>& blocks,
                         EnsembleKind kind) {
    ParityMatrix h(base.rows * n, base.cols * n);
    for (const auto& [pos, blk] : blocks) {
        const auto [br, bc] = pos;
        for (int r = 0; r < n; ++r)
            for (int c : blk.row_entries(r)) h.add_entry(br * n + r, bc * n + c);
    }
    h.sort_adjacency();
    h.kind = kind;
    h.blocks = blocks;
    return h;
}

} // namespace

ParityMatrix lift(const BaseMatrix& base, int n, EnsembleKind kind, const OffsetTable& offsets) {
    if (kind == EnsembleKind::Unified) throw std::invalid_argument("lift: Unified is not a liftable kind");
    if (kind == EnsembleKind::EcLdgm && !base.parity_region_is_diagonal())
        throw std::invalid_argument("lift: EC-LDGM requires a diagonal parity region");
    if (kind == EnsembleKind::LtLdpc && !base.parity_region_is_lower_triangular())
        throw std::invalid_argument("lift: LT-LDPC requires a lower-triangular parity region");
    if (kind == EnsembleKind::LDGM && !base.parity_region_is_diagonal())
        throw std::invalid_argument("lift: LDGM requires a diagonal parity region");

    std::map<std::pair<int, int>, CirculantBlock> blocks;
    for (const auto& [r, c] : base.entries) {
        if (base.is_self_parity(r, c))
            blocks[{r, c}] = kind == EnsembleKind::EcLdgm ? CirculantBlock::zigzag(n)
                                                          : CirculantBlock::identity(n);
        else
            blocks[{r, c}] = CirculantBlock::circulant(n, offsets.at(base, r, c) % n);
    }
    return lift_blocks(base, n, blocks, kind);
}

ParityMatrix lift_qc(const BaseMatrix& base, int n, const OffsetTable& offsets) {
    std::map<std::pair<int, int>, CirculantBlock> blocks;
    for (const auto& [r, c] : base.entries) {
        auto it = offsets.p.find({r, c});
        int p = it != offsets.p.end() ? it->second % n : 0;
        blocks[{r, c}] = CirculantBlock::circulant(n, p);
    }
    ParityMatrix h = lift_blocks(base, n, blocks, EnsembleKind::Unified);
    h.kind = EnsembleKind::Unified;
    return h;
}

ParityMatrix lift_random_permutations(const BaseMatrix& base, int n, EnsembleKind kind, Rng& rng) {
    if (kind == EnsembleKind::EcLdgm && !base.parity_region_is_diagonal())
        throw std::invalid_argument("lift: EC-LDGM requires a diagonal parity region");
    ParityMatrix h(base.rows * n, base.cols * n);
    std::vector<int> perm(n);
    for (const auto& [br, bc] : base.entries) {
        if (base.is_self_parity(br, bc)) {
            CirculantBlock blk = kind == EnsembleKind::EcLdgm ? CirculantBlock::zigzag(n)
                                                              : CirculantBlock::identity(n);
            for (int r = 0; r < n; ++r)
                for (int c : blk.row_entries(r)) h.add_entry(br * n + r, bc * n + c);
        } else {
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int r = 0; r < n; ++r) h.add_entry(br * n + r, bc * n + perm[r]);
        }
    }
    h.sort_adjacency();
    h.kind = kind;
    return h;
}

} // namespace gancc
