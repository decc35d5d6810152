#pragma once

#include <cstdint>

namespace orient {

// SplitMix64 finalizer (Steele, Lea, Flood). All randomness in the project
// is derived from it, either as a stateless hash of (seed, key...) tuples or
// as the stepped generator below. Derived streams make results independent
// of evaluation order and thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix2(std::uint64_t seed, std::uint64_t a) {
    return splitmix64(splitmix64(seed) ^ splitmix64(a ^ 0x165667B19E3779F9ULL));
}

inline std::uint64_t mix3(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return splitmix64(mix2(seed, a) ^ splitmix64(b ^ 0xD1B54A32D192ED03ULL));
}

// Uniform double in [0, 1), 53 bits of mantissa.
inline double unit_from_bits(std::uint64_t h) {
    return double(h >> 11) * 0x1.0p-53;
}

struct SplitMix {
    std::uint64_t state = 0;

    SplitMix() = default;
    explicit SplitMix(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_unit() { return unit_from_bits(next()); }

    // Uniform in [0, n). Modulo bias is irrelevant at desk scale.
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

} // namespace orient
