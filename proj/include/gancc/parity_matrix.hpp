#ifndef GANCC_PARITY_MATRIX_HPP
#define GANCC_PARITY_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gancc/bits.hpp"

namespace gancc {

enum class EnsembleKind { LDGM, LtLdpc, EcLdgm, Unified };

enum class BlockKind { Zero, Circulant, Zigzag };

// N x N substitution block. Circulant row r has its single 1 at column
// (r + offset) mod N; Identity is Circulant with offset 0. Zigzag row r
// has 1s at columns r and r-1 (row 0 only at column 0).
struct CirculantBlock {
    int size = 0;
    BlockKind kind = BlockKind::Zero;
    int offset = 0; // meaningful for Circulant only

    static CirculantBlock zero(int n) { return {n, BlockKind::Zero, 0}; }
    static CirculantBlock circulant(int n, int p) { return {n, BlockKind::Circulant, p}; }
    static CirculantBlock identity(int n) { return {n, BlockKind::Circulant, 0}; }
    static CirculantBlock zigzag(int n) { return {n, BlockKind::Zigzag, 0}; }

    // column indices of the 1s in row r, local to the block
    std::vector<int> row_entries(int r) const;
};

// Sparse binary parity-check matrix stored as row adjacency with the
// column adjacency kept in sync (BP walks edges both ways).
class ParityMatrix {
public:
    ParityMatrix() = default;
    ParityMatrix(int rows, int cols) : n_rows_(rows), n_cols_(cols), row_adj_(rows), col_adj_(cols) {}

    int rows() const { return n_rows_; }
    int cols() const { return n_cols_; }

    void add_entry(int r, int c);
    void sort_adjacency(); // call once after bulk add_entry; also rejects duplicates

    const std::vector<int>& row(int r) const { return row_adj_[r]; }
    const std::vector<int>& col(int c) const { return col_adj_[c]; }
    const std::vector<std::vector<int>>& row_adj() const { return row_adj_; }
    const std::vector<std::vector<int>>& col_adj() const { return col_adj_; }

    std::size_t nonzeros() const;

    EnsembleKind kind = EnsembleKind::Unified;
    // base-position -> substitution, present for lifted (non-unified) matrices
    std::optional<std::map<std::pair<int, int>, CirculantBlock>> blocks;

    // rows of other stacked above rows of *this (same column count)
    ParityMatrix stacked_under(const ParityMatrix& other) const;

private:
    int n_rows_ = 0;
    int n_cols_ = 0;
    std::vector<std::vector<int>> row_adj_;
    std::vector<std::vector<int>> col_adj_;
};

// XOR of bits over each row's support; true iff every check is satisfied
bool syndrome_is_zero(const ParityMatrix& h, const BitVec& bits);

// alist interchange format: "n_cols n_rows", max degrees, per-node degrees,
// then 1-indexed adjacency lists padded with zeros
void write_alist(std::ostream& os, const ParityMatrix& h);
ParityMatrix read_alist(std::istream& is);
void write_alist_file(const std::string& path, const ParityMatrix& h);
ParityMatrix read_alist_file(const std::string& path);

} // namespace gancc

#endif
