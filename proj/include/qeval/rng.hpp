#pragma once

#include <cstdint>
#include <vector>

namespace qeval {

// splitmix64: tiny counter-based generator with a fixed cross-platform
// sequence, used wherever outputs must be byte-reproducible (seeded
// shuffles, mock jitter). std::shuffle / distributions are not portable
// across standard libraries.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a ^ (b * 0x9E3779B97F4A7C15ULL);
    return splitmix64(s);
}

// Fisher-Yates with splitmix64; deterministic for a given seed.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::uint64_t seed) {
    std::uint64_t state = seed;
    for (std::size_t i = items.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(splitmix64(state) % i);
        using std::swap;
        swap(items[i - 1], items[j]);
    }
}

}  // namespace qeval
