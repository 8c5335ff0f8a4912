#ifndef GANCC_GF2_HPP
#define GANCC_GF2_HPP

#include <cstdint>
#include <vector>

#include "gancc/parity_matrix.hpp"
#include "gancc/rng.hpp"

namespace gancc {

// Row-reduced form of a binary parity-check matrix. Encoding assigns the
// information bits to the free columns and fills each pivot column by
// back-substitution, so H * c = 0 by construction.
class Gf2Encoder {
public:
    explicit Gf2Encoder(const ParityMatrix& h);

    int n() const { return n_; }
    int rank() const { return static_cast<int>(pivot_cols_.size()); }
    int k() const { return n_ - rank(); }

    const std::vector<int>& info_cols() const { return free_cols_; }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }

    // info.size() == k()
    BitVec encode(const BitVec& info) const;

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> reduced_; // rank() rows of n_ bits each
    std::vector<int> pivot_cols_;
    std::vector<int> free_cols_;
};

// One user's channel code: sparse H for decoding, reduced form for encoding.
struct ChannelCodeSpec {
    ParityMatrix h;      // n columns = N, rows = N - K before reduction
    Gf2Encoder encoder;  // built from h
    explicit ChannelCodeSpec(ParityMatrix h_) : h(std::move(h_)), encoder(h) {}
    int n() const { return h.cols(); }
    int k() const { return encoder.k(); }
};

// (wc, wr)-regular parity-check matrix with n columns and n*wc/wr rows;
// progressive-edge-growth placement keeps 4-cycles out when feasible.
// Deterministic per seed.
ParityMatrix generate_regular_ldpc(int n, int wc, int wr, std::uint64_t seed);

} // namespace gancc

#endif
