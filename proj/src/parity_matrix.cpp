#include "gancc/parity_matrix.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gancc {

std::vector<int> CirculantBlock::row_entries(int r) const {
    switch (kind) {
        case BlockKind::Zero:
            return {};
        case BlockKind::Circulant:
            return {static_cast<int>((r + offset) % size)};
        case BlockKind::Zigzag:
            if (r == 0) return {0};
            return {r - 1, r};
    }
    return {};
}

void ParityMatrix::add_entry(int r, int c) {
    if (r < 0 || r >= n_rows_ || c < 0 || c >= n_cols_)
        throw std::out_of_range("ParityMatrix::add_entry: index out of range");
    row_adj_[r].push_back(c);
    col_adj_[c].push_back(r);
}

void ParityMatrix::sort_adjacency() {
    for (auto& row : row_adj_) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::logic_error("ParityMatrix: duplicate entry in row");
    }
    for (auto& col : col_adj_) std::sort(col.begin(), col.end());
}

std::size_t ParityMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& row : row_adj_) n += row.size();
    return n;
}

ParityMatrix ParityMatrix::stacked_under(const ParityMatrix& other) const {
    if (other.cols() != n_cols_) throw std::invalid_argument("stacked_under: column mismatch");
    ParityMatrix out(other.rows() + n_rows_, n_cols_);
    for (int r = 0; r < other.rows(); ++r)
        for (int c : other.row(r)) out.add_entry(r, c);
    for (int r = 0; r < n_rows_; ++r)
        for (int c : row_adj_[r]) out.add_entry(other.rows() + r, c);
    out.sort_adjacency();
    return out;
}

bool syndrome_is_zero(const ParityMatrix& h, const BitVec& bits) {
    if (static_cast<int>(bits.size()) != h.cols())
        throw std::invalid_argument("syndrome: dimension mismatch");
    for (int r = 0; r < h.rows(); ++r) {
        std::uint8_t s = 0;
        for (int c : h.row(r)) s ^= bits[c];
        if (s) return false;
    }
    return true;
}

void write_alist(std::ostream& os, const ParityMatrix& h) {
    const int n = h.cols();
    const int m = h.rows();
    std::size_t dvmax = 0, dcmax = 0;
    for (int c = 0; c < n; ++c) dvmax = std::max(dvmax, h.col(c).size());
    for (int r = 0; r < m; ++r) dcmax = std::max(dcmax, h.row(r).size());

    os << n << ' ' << m << '\n';
    os << dvmax << ' ' << dcmax << '\n';
    for (int c = 0; c < n; ++c) os << h.col(c).size() << (c + 1 < n ? ' ' : '\n');
    for (int r = 0; r < m; ++r) os << h.row(r).size() << (r + 1 < m ? ' ' : '\n');
    for (int c = 0; c < n; ++c) {
        for (std::size_t k = 0; k < dvmax; ++k) {
            int v = k < h.col(c).size() ? h.col(c)[k] + 1 : 0;
            os << v << (k + 1 < dvmax ? ' ' : '\n');
        }
    }
    for (int r = 0; r < m; ++r) {
        for (std::size_t k = 0; k < dcmax; ++k) {
            int v = k < h.row(r).size() ? h.row(r)[k] + 1 : 0;
            os << v << (k + 1 < dcmax ? ' ' : '\n');
        }
    }
}

ParityMatrix read_alist(std::istream& is) {
    int n, m;
    if (!(is >> n >> m)) throw std::runtime_error("alist: bad header");
    if (n <= 0 || m <= 0) throw std::runtime_error("alist: nonpositive dimensions");
    std::size_t dvmax, dcmax;
    if (!(is >> dvmax >> dcmax)) throw std::runtime_error("alist: bad max degrees");

    std::vector<std::size_t> dv(n), dc(m);
    for (auto& d : dv)
        if (!(is >> d)) throw std::runtime_error("alist: bad column degrees");
    for (auto& d : dc)
        if (!(is >> d)) throw std::runtime_error("alist: bad row degrees");

    ParityMatrix h(m, n);
    for (int c = 0; c < n; ++c) {
        for (std::size_t k = 0; k < dvmax; ++k) {
            int r;
            if (!(is >> r)) throw std::runtime_error("alist: truncated column list");
            if (r == 0) continue;
            if (r < 1 || r > m) throw std::runtime_error("alist: row index out of range");
            if (k >= dv[c]) throw std::runtime_error("alist: nonzero past declared degree");
            h.add_entry(r - 1, c);
        }
    }
    // row lists are redundant with the column lists; read and cross-check
    for (int r = 0; r < m; ++r) {
        std::size_t seen = 0;
        for (std::size_t k = 0; k < dcmax; ++k) {
            int c;
            if (!(is >> c)) throw std::runtime_error("alist: truncated row list");
            if (c == 0) continue;
            if (c < 1 || c > n) throw std::runtime_error("alist: column index out of range");
            ++seen;
        }
        if (seen != dc[r]) throw std::runtime_error("alist: row degree mismatch");
    }
    h.sort_adjacency();
    return h;
}

void write_alist_file(const std::string& path, const ParityMatrix& h) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_alist(os, h);
}

ParityMatrix read_alist_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_alist(is);
}

} // namespace gancc
