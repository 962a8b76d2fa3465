#pragma once

#include <cstdint>
#include <random>

namespace apfnav {

/// SplitMix64 finalizer; bijective 64-bit mix.
constexpr std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Independent per-trial stream derived from (seed, trial index) by a
/// counter-based split, so trial i gets the same engine state no matter how
/// trials are scheduled across workers.
inline std::mt19937_64 make_trial_rng(std::uint64_t seed, std::uint64_t trial_index)
{
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(trial_index)));
}

} // namespace apfnav
