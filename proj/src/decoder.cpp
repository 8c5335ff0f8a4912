#include "gancc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gancc {

namespace {

constexpr double kAtanhLimit = 1.0 - 1e-12;

inline double clamp_mag(double x, double lim) {
    if (x > lim) return lim;
    if (x < -lim) return -lim;
    return x;
}

} // namespace

SumProductDecoder::SumProductDecoder(const ParityMatrix& h) : n_rows_(h.rows()), n_cols_(h.cols()) {
    row_ptr_.assign(n_rows_ + 1, 0);
    for (int r = 0; r < n_rows_; ++r) row_ptr_[r + 1] = row_ptr_[r] + static_cast<int>(h.row(r).size());
    const int edges = row_ptr_[n_rows_];
    edge_col_.resize(edges);
    col_ptr_.assign(n_cols_ + 1, 0);
    for (int r = 0; r < n_rows_; ++r) {
        int e = row_ptr_[r];
        for (int c : h.row(r)) {
            edge_col_[e++] = c;
            ++col_ptr_[c + 1];
        }
    }
    for (int c = 0; c < n_cols_; ++c) col_ptr_[c + 1] += col_ptr_[c];
    col_edges_.resize(edges);
    std::vector<int> fill(col_ptr_.begin(), col_ptr_.end() - 1);
    for (int e = 0; e < edges; ++e) col_edges_[fill[edge_col_[e]]++] = e;

    v2c_.resize(edges);
    c2v_.resize(edges);
    std::size_t max_deg = 0;
    for (int r = 0; r < n_rows_; ++r)
        max_deg = std::max(max_deg, static_cast<std::size_t>(row_ptr_[r + 1] - row_ptr_[r]));
    tn_.resize(max_deg * 2 + 2);
    th_.resize(max_deg + 1);
}

DecodeResult SumProductDecoder::decode(const std::vector<double>& llr_in, const BpOptions& opt) {
    if (static_cast<int>(llr_in.size()) != n_cols_)
        throw std::invalid_argument("sum_product: LLR length mismatch");
    if (opt.max_iters < 1) throw std::invalid_argument("sum_product: max_iters must be >= 1");

    DecodeResult res;
    res.posterior = llr_in;
    res.hard.resize(n_cols_);

    const int edges = static_cast<int>(edge_col_.size());
    for (int e = 0; e < edges; ++e) v2c_[e] = clamp_mag(llr_in[edge_col_[e]], opt.llr_clamp);

    double* fwd = tn_.data();
    double* bwd = tn_.data() + tn_.size() / 2;

    for (int iter = 1; iter <= opt.max_iters; ++iter) {
        res.iterations_used = iter;

        // check pass: c2v = 2 atanh( prod of tanh(v2c/2) over the others )
        for (int r = 0; r < n_rows_; ++r) {
            const int b = row_ptr_[r], d = row_ptr_[r + 1] - b;
            if (d == 0) continue;
            for (int j = 0; j < d; ++j) th_[j] = std::tanh(0.5 * v2c_[b + j]);
            fwd[0] = 1.0;
            for (int j = 0; j < d; ++j) fwd[j + 1] = fwd[j] * th_[j];
            bwd[d] = 1.0;
            for (int j = d - 1; j >= 0; --j) bwd[j] = bwd[j + 1] * th_[j];
            for (int j = 0; j < d; ++j) {
                double t = clamp_mag(fwd[j] * bwd[j + 1], kAtanhLimit);
                c2v_[b + j] = 2.0 * std::atanh(t);
            }
        }

        if (opt.c2v_mean_trace) {
            double s = 0.0;
            for (int e = 0; e < edges; ++e) s += c2v_[e];
            opt.c2v_mean_trace->push_back(s / edges);
        }

        // variable pass: posterior and extrinsic returns
        for (int c = 0; c < n_cols_; ++c) {
            double sum = llr_in[c];
            for (int k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k) sum += c2v_[col_edges_[k]];
            res.posterior[c] = sum;
            res.hard[c] = sum < 0.0 ? 1 : 0;
            for (int k = col_ptr_[c]; k < col_ptr_[c + 1]; ++k) {
                int e = col_edges_[k];
                v2c_[e] = clamp_mag(sum - c2v_[e], opt.llr_clamp);
            }
        }

        // syndrome on the current hard decisions
        bool ok = true;
        for (int r = 0; r < n_rows_ && ok; ++r) {
            std::uint8_t s = 0;
            for (int e = row_ptr_[r]; e < row_ptr_[r + 1]; ++e) s ^= res.hard[edge_col_[e]];
            ok = s == 0;
        }
        if (ok) {
            res.converged = true;
            if (opt.early_exit) break;
        } else {
            res.converged = false;
        }
    }
    return res;
}

DecodeResult sum_product(const ParityMatrix& h, const std::vector<double>& llr_in, int max_iters,
                         const BpOptions& base_opt) {
    SumProductDecoder dec(h);
    BpOptions opt = base_opt;
    opt.max_iters = max_iters;
    return dec.decode(llr_in, opt);
}

std::vector<double> stage_messages(SumProductDecoder& dec, const std::vector<double>& input, int iters,
                                   const BpOptions& opt) {
    BpOptions o = opt;
    o.max_iters = iters;
    DecodeResult r = dec.decode(input, o);
    std::vector<double> out(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) out[i] = r.posterior[i] - input[i];
    return out;
}

DecodeResult decode_iterative_global(const ParityMatrix& network, int m, int n,
                                     const std::vector<const ChannelCodeSpec*>& specs,
                                     const std::vector<double>& llr_in, int net_iters, int ch_iters,
                                     int global_rounds) {
    if (static_cast<int>(specs.size()) != m)
        throw std::invalid_argument("staged decode: need one spec (possibly null) per user");
    const int total = 2 * m * n;
    if (network.cols() != total || static_cast<int>(llr_in.size()) != total)
        throw std::invalid_argument("staged decode: dimension mismatch");
    if (global_rounds < 0) throw std::invalid_argument("staged decode: negative global rounds");

    SumProductDecoder net_dec(network);
    std::vector<std::unique_ptr<SumProductDecoder>> ch_dec(m);
    for (int u = 0; u < m; ++u)
        if (specs[u]) ch_dec[u] = std::make_unique<SumProductDecoder>(specs[u]->h);

    DecodeResult res;
    res.hard.resize(total);
    std::vector<double> m_ch(total, 0.0), m_net(total, 0.0);
    std::vector<double> in_net(total), in_ch(n), posterior(total);
    BpOptions opt;

    for (int round = 0; round <= global_rounds; ++round) {
        for (int i = 0; i < total; ++i) in_net[i] = llr_in[i] + m_ch[i];
        opt.max_iters = net_iters;
        {
            DecodeResult r = net_dec.decode(in_net, opt);
            res.iterations_used += r.iterations_used;
            for (int i = 0; i < total; ++i) m_net[i] = r.posterior[i] - in_net[i];
        }
        for (int u = 0; u < m; ++u) {
            if (!ch_dec[u]) continue;
            for (int k = 0; k < n; ++k) in_ch[k] = llr_in[u * n + k] + m_net[u * n + k];
            opt.max_iters = ch_iters;
            DecodeResult r = ch_dec[u]->decode(in_ch, opt);
            res.iterations_used += r.iterations_used;
            for (int k = 0; k < n; ++k) m_ch[u * n + k] = r.posterior[k] - in_ch[k];
        }

        for (int i = 0; i < total; ++i) {
            posterior[i] = llr_in[i] + m_net[i] + m_ch[i];
            res.hard[i] = posterior[i] < 0.0 ? 1 : 0;
        }
        bool ok = syndrome_is_zero(network, res.hard);
        for (int u = 0; u < m && ok; ++u) {
            if (!specs[u]) continue;
            BitVec slice(res.hard.begin() + u * n, res.hard.begin() + (u + 1) * n);
            ok = syndrome_is_zero(specs[u]->h, slice);
        }
        res.converged = ok;
        if (ok) break;
    }
    res.posterior = std::move(posterior);
    return res;
}

DecodeResult decode_sequential(const ParityMatrix& network, int m, int n,
                               const std::vector<const ChannelCodeSpec*>& specs,
                               const std::vector<double>& llr_in, int net_iters, int ch_iters) {
    return decode_iterative_global(network, m, n, specs, llr_in, net_iters, ch_iters, 0);
}

DecodeResult decode_joint(const ParityMatrix& unified, const std::vector<double>& llr_in, int iters) {
    return sum_product(unified, llr_in, iters);
}

} // namespace gancc
