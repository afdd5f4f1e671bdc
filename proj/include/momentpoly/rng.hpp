#pragma once

#include <cstdint>

namespace momentpoly {

// Counter-based splitmix64 stream: value at position `index` of the sequence
// seeded by `seed`. Random access keeps results independent of how work is
// split across threads, and the output is identical on every platform.
inline std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace momentpoly
