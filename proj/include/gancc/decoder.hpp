#ifndef GANCC_DECODER_HPP
#define GANCC_DECODER_HPP

#include <memory>
#include <vector>

#include "gancc/gf2.hpp"
#include "gancc/parity_matrix.hpp"

namespace gancc {

struct DecodeResult {
    BitVec hard;
    std::vector<double> posterior;
    int iterations_used = 0;
    bool converged = false;
};

struct BpOptions {
    int max_iters = 30;
    bool early_exit = true;    // stop on zero syndrome
    double llr_clamp = 30.0;   // variable-to-check magnitudes
    // when set, the mean check-to-variable message of each iteration is
    // appended (density-evolution calibration)
    std::vector<double>* c2v_mean_trace = nullptr;
};

// Flooding-schedule sum-product decoder over a fixed sparse matrix.
// Check update is the tanh product, variable update the LLR sum; the
// atanh argument is kept below 1 - 1e-12 so outputs stay finite.
class SumProductDecoder {
public:
    explicit SumProductDecoder(const ParityMatrix& h);

    DecodeResult decode(const std::vector<double>& llr_in, const BpOptions& opt);

    int rows() const { return n_rows_; }
    int cols() const { return n_cols_; }

private:
    int n_rows_ = 0;
    int n_cols_ = 0;
    std::vector<int> row_ptr_;    // edges grouped by row
    std::vector<int> edge_col_;
    std::vector<int> col_ptr_;    // edge ids grouped by column
    std::vector<int> col_edges_;
    // workspace
    std::vector<double> v2c_, c2v_, tn_, th_;
};

// convenience wrapper matching the one-shot call style
DecodeResult sum_product(const ParityMatrix& h, const std::vector<double>& llr_in, int max_iters,
                         const BpOptions& base_opt = {});

// Two-level decoding of the network code plus per-user channel codes.
// specs[u] may be null (uncoded user). Sequential passes the full network
// posteriors forward once; iterative-global alternates the two stages
// g+1 times exchanging extrinsic information.
DecodeResult decode_sequential(const ParityMatrix& network, int m, int n,
                               const std::vector<const ChannelCodeSpec*>& specs,
                               const std::vector<double>& llr_in, int net_iters, int ch_iters);

DecodeResult decode_iterative_global(const ParityMatrix& network, int m, int n,
                                     const std::vector<const ChannelCodeSpec*>& specs,
                                     const std::vector<double>& llr_in, int net_iters, int ch_iters,
                                     int global_rounds);

// Joint decoding: one sum-product run over the unified matrix.
DecodeResult decode_joint(const ParityMatrix& unified, const std::vector<double>& llr_in, int iters);

// One stage pass used by the iterative decoder and its tests: runs BP with
// input (intrinsic + extrinsic_in) and returns the per-bit sum of
// check-to-variable messages (posterior minus input).
std::vector<double> stage_messages(SumProductDecoder& dec, const std::vector<double>& input, int iters,
                                   const BpOptions& opt = {});

} // namespace gancc

#endif
