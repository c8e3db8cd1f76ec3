#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace struclus {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Independent stream for a task identified by a key path, e.g.
/// (seed, iteration, cluster id, run index). Streams do not depend on the
/// order in which tasks are scheduled.
inline Rng derive_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t state = splitmix64(seed);
    for (auto k : keys) state = splitmix64(state ^ splitmix64(k + 0x632be59bd9b4e019ULL));
    return Rng(state);
}

}  // namespace struclus
