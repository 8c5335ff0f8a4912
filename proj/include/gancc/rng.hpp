#ifndef GANCC_RNG_HPP
#define GANCC_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace gancc {

using Rng = std::mt19937_64;

// splitmix64 finalizer, used to turn structured seed paths into stream seeds
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Hierarchical seed derivation: master -> {trial, subsystem, ...}.
// Every random consumer gets its own stream so parallel trial order
// cannot change the draws.
inline std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = mix64(master);
    for (auto p : path) s = mix64(s ^ (p + 0x632be59bd9b4e019ULL));
    return s;
}

inline Rng make_rng(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
    return Rng(derive_seed(master, path));
}

} // namespace gancc

#endif
