#include "gancc/channel.hpp"

#include <stdexcept>

namespace gancc {

std::vector<double> bpsk_modulate(const BitVec& bits) {
    std::vector<double> s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? -1.0 : 1.0;
    return s;
}

ChannelRealization sample_fading(FadingKind kind, int m, int frame_len, double n0, Rng& rng) {
    if (m < 1) throw std::invalid_argument("sample_fading: m must be >= 1");
    if (n0 <= 0) throw std::invalid_argument("sample_fading: N0 must be positive");
    ChannelRealization ch;
    ch.kind = kind;
    ch.n0 = n0;
    std::normal_distribution<double> g(0.0, std::sqrt(0.5)); // per real dimension
    const int count = kind == FadingKind::Block ? m : frame_len;
    ch.alpha.reserve(count);
    for (int i = 0; i < count; ++i) ch.alpha.emplace_back(g(rng), g(rng));
    return ch;
}

const std::complex<double>& alpha_at(const ChannelRealization& ch, int n, std::size_t k) {
    if (ch.kind == FadingKind::Iid) return ch.alpha[k];
    const std::size_t m = ch.alpha.size();
    std::size_t packet = k / static_cast<std::size_t>(n);
    return ch.alpha[packet % m]; // relay packet u reuses user u's coefficient
}

std::vector<std::complex<double>> apply_channel(const std::vector<double>& symbols,
                                                const ChannelRealization& ch, int n, Rng& rng) {
    if (ch.kind == FadingKind::Iid && ch.alpha.size() != symbols.size())
        throw std::invalid_argument("apply_channel: IID coefficient count mismatch");
    std::vector<std::complex<double>> y(symbols.size());
    std::normal_distribution<double> g(0.0, std::sqrt(ch.n0 / 2.0));
    for (std::size_t k = 0; k < symbols.size(); ++k) {
        const auto& a = alpha_at(ch, n, k);
        y[k] = a * symbols[k] + std::complex<double>(g(rng), g(rng));
    }
    return y;
}

std::vector<double> llr_demap(const std::vector<std::complex<double>>& y,
                              const ChannelRealization& ch, int n) {
    if (ch.n0 <= 0) throw std::invalid_argument("llr_demap: N0 must be positive");
    std::vector<double> llr(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        const auto& a = alpha_at(ch, n, k);
        llr[k] = 4.0 * (std::conj(a) * y[k]).real() / ch.n0;
    }
    return llr;
}

} // namespace gancc
