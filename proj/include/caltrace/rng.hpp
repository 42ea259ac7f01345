#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace caltrace {

// splitmix64 step; used only to derive independent sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
    std::uint64_t state = seed;
    std::uint64_t out = splitmix64(state);
    for (std::uint64_t step : path) {
        state ^= step + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
        out = splitmix64(state);
    }
    return out;
}

// Uniform double in [0, 1) from the engine's top 53 bits. std::uniform_*
// distributions are not bit-stable across standard libraries; this mapping
// is, which keeps seeded fixtures portable.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, bound). bound must be nonzero.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

inline bool coin(std::mt19937_64& rng, double probability) {
    return uniform_unit(rng) < probability;
}

}  // namespace caltrace
