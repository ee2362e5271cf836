#pragma once

#include <cstdint>

namespace abexp {

/// i-th value of the splitmix64 stream for a given seed. Stateless, so
/// sample i can be drawn independently of all others; results are
/// identical regardless of evaluation order or partitioning.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Numerator of the i-th sample point k/denom, k uniform in {1,...,denom-1}.
inline std::uint64_t sample_numerator(std::uint64_t seed, std::uint64_t i, std::uint64_t denom) {
    return 1 + splitmix64_at(seed, i) % (denom - 1);
}

}  // namespace abexp
