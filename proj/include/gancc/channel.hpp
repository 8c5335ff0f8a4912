#ifndef GANCC_CHANNEL_HPP
#define GANCC_CHANNEL_HPP

#include <complex>
#include <vector>

#include "gancc/bits.hpp"
#include "gancc/rng.hpp"

namespace gancc {

enum class FadingKind { Block, Iid };

// Fading coefficients plus the noise level. Block mode has one coefficient
// per user (shared by that user's source and relay packet); IID mode has
// one per transmitted bit.
struct ChannelRealization {
    FadingKind kind = FadingKind::Block;
    std::vector<std::complex<double>> alpha;
    double n0 = 1.0;
};

// 0 -> +1, 1 -> -1
std::vector<double> bpsk_modulate(const BitVec& bits);

// alpha ~ CN(0, 1): E|alpha|^2 = 1, |alpha| Rayleigh
ChannelRealization sample_fading(FadingKind kind, int m, int frame_len, double n0, Rng& rng);

// y_k = alpha_k x_k + z_k with z ~ CN(0, N0). In block mode symbol k of a
// 2m-packet frame uses alpha[user(k)] where packets are laid out
// [s_1 .. s_m | y_1 .. y_m] with n bits each.
std::vector<std::complex<double>> apply_channel(const std::vector<double>& symbols,
                                                const ChannelRealization& ch, int n, Rng& rng);

// coherent demapping with known alpha: LLR_k = 4 Re(conj(alpha_k) y_k) / N0
std::vector<double> llr_demap(const std::vector<std::complex<double>>& y,
                              const ChannelRealization& ch, int n);

// alpha for symbol index k under the frame layout above
const std::complex<double>& alpha_at(const ChannelRealization& ch, int n, std::size_t k);

} // namespace gancc

#endif
