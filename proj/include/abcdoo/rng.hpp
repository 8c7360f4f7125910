#pragma once

#include <cstdint>
#include <random>

namespace abcdoo {

using Rng = std::mt19937_64;

/// Labels for independent random streams derived from one master seed.
enum class Stream : std::uint64_t {
    Degrees = 1,
    Outliers,
    CommunitySizes,
    Growth,
    Points,
    Pairing,
    DegreeSplit,
    Allocation,
    CommunityGraph,
    BackgroundGraph,
    LocalRewire,
    GlobalRewire,
    Ckb,
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, Stream stream, std::uint64_t index = 0) noexcept {
    return mix64(mix64(mix64(seed) ^ static_cast<std::uint64_t>(stream)) + index);
}

inline Rng make_stream(std::uint64_t seed, Stream stream, std::uint64_t index = 0) {
    return Rng(derive_seed(seed, stream, index));
}

/// Uniform double in [0, 1).
inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

/// Uniform integer in [0, bound).
template <class Int>
Int uniform_below(Rng& rng, Int bound) {
    return std::uniform_int_distribution<Int>(0, bound - 1)(rng);
}

} // namespace abcdoo
