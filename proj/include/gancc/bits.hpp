#ifndef GANCC_BITS_HPP
#define GANCC_BITS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gancc/rng.hpp"

namespace gancc {

using BitVec = std::vector<std::uint8_t>; // one bit per byte, values 0/1

inline BitVec random_bits(std::size_t n, Rng& rng) {
    BitVec v(n);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng() & 1u);
    return v;
}

// dst ^= src cyclically shifted by p: dst[k] ^= src[(k+p) mod n]
inline void xor_shifted(BitVec& dst, const BitVec& src, std::size_t p) {
    const std::size_t n = dst.size();
    if (src.size() != n) throw std::invalid_argument("xor_shifted: length mismatch");
    std::size_t j = p % n;
    for (std::size_t k = 0; k < n; ++k) {
        dst[k] ^= src[j];
        if (++j == n) j = 0;
    }
}

// y[0] = x[0], y[i] = x[i] ^ x[i-1]  (adjacent difference over GF(2))
inline BitVec differential_encode(const BitVec& x) {
    if (x.empty()) throw std::invalid_argument("differential_encode: empty input");
    BitVec y(x.size());
    y[0] = x[0];
    for (std::size_t i = 1; i < x.size(); ++i) y[i] = x[i] ^ x[i - 1];
    return y;
}

// inverse of differential_encode: running XOR prefix
inline BitVec differential_decode(const BitVec& y) {
    if (y.empty()) throw std::invalid_argument("differential_decode: empty input");
    BitVec x(y.size());
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        acc ^= y[i];
        x[i] = acc;
    }
    return x;
}

} // namespace gancc

#endif
