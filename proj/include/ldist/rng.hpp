#pragma once

#include <cstdint>

namespace ldist {

// Counter-based random numbers: every draw is a pure function of
// (seed, sample index, lane), so samples can be generated in any order and on
// any number of threads with identical results. The generator is the
// SplitMix64 finalizer applied twice to a Weyl-mixed counter, which passes the
// usual equidistribution smoke tests and is far stronger than needed for the
// Monte Carlo checks here.

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t lane) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = mix64(z ^ (0xd1b54a32d192ed03ull * (lane + 1)));
    return mix64(z + seed);
}

// Uniform in [0, 1), 53-bit resolution.
inline double uniform01(std::uint64_t seed, std::uint64_t index, std::uint64_t lane) {
    return static_cast<double>(counter_rng(seed, index, lane) >> 11) * 0x1.0p-53;
}

} // namespace ldist
