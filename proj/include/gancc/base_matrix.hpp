#ifndef GANCC_BASE_MATRIX_HPP
#define GANCC_BASE_MATRIX_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gancc/parity_matrix.hpp"
#include "gancc/rng.hpp"

namespace gancc {

// The m x 2m network base code. Row r is relay r's check; the leftmost
// systematic_cols columns are source packets; column systematic_cols + r
// is relay r's own parity (the self-parity diagonal).
struct BaseMatrix {
    int rows = 0;
    int cols = 0;
    int systematic_cols = 0;
    std::set<std::pair<int, int>> entries;

    bool has(int r, int c) const { return entries.count({r, c}) != 0; }
    bool is_self_parity(int r, int c) const { return c == systematic_cols + r; }

    // rows = m, cols = 2m, self-parity diagonal pre-filled
    static BaseMatrix diagonal(int m);

    // parity region is exactly the diagonal (no relay references)
    bool parity_region_is_diagonal() const;
    // parity region satisfies col <= systematic_cols + row
    bool parity_region_is_lower_triangular() const;

    ParityMatrix to_parity_matrix() const;
};

// p : (row, col) -> circulant offset, defined for the nonzero non-diagonal
// entries. The self-parity diagonal is implicitly Identity (offset 0).
struct OffsetTable {
    std::map<std::pair<int, int>, int> p;

    // offset for a nonzero entry; diagonal falls back to 0
    int at(const BaseMatrix& base, int r, int c) const;
};

// p_{i,j} = i*j mod N
int offset_scheme(int i, int j, int n);

// offset_scheme applied to every nonzero non-diagonal entry of base
OffsetTable make_offset_table(const BaseMatrix& base, int n);
// offsets forced to zero: the degenerate lifting that reproduces the base
// code N times in parallel
OffsetTable make_identity_offsets(const BaseMatrix& base);

// Substitute every base entry with an N x N block: zeros -> Zero blocks,
// nonzero non-diagonal -> Circulant(p), self-parity diagonal -> Identity
// (LDGM / LT-LDPC) or Zigzag (EC-LDGM).
ParityMatrix lift(const BaseMatrix& base, int n, EnsembleKind kind, const OffsetTable& offsets);

// Generic quasi-cyclic lift used by girth analysis: every nonzero entry,
// diagonal included, becomes Circulant(offsets.p[{r,c}]). Entries absent
// from the table default to offset 0.
ParityMatrix lift_qc(const BaseMatrix& base, int n, const OffsetTable& offsets);

// Lift with independent uniformly random permutation blocks replacing the
// circulants (self-parity diagonal handled per kind as in lift()).
ParityMatrix lift_random_permutations(const BaseMatrix& base, int n, EnsembleKind kind, Rng& rng);

} // namespace gancc

#endif
