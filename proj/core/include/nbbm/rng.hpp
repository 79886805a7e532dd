#pragma once

#include <cstdint>
#include <random>

namespace nbbm {

/// Finalizer-style 64-bit mixer (splitmix64). Used to derive independent
/// sub-stream seeds from a master seed so that families / replicas / paths
/// can be generated in any order (or in parallel) with identical results.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for the `index`-th sub-stream of `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 1));
}

/// Engine used everywhere. One engine per logical stream, never shared.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t master, std::uint64_t index) {
    return Rng(derive_seed(master, index));
}

}  // namespace nbbm
