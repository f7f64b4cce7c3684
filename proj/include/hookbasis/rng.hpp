#pragma once

#include <cstdint>

namespace hookbasis {

/// Default seed for every randomized suite; CI pins it so certificates
/// are reproducible byte for byte.
inline constexpr std::uint64_t default_seed = 1729;

/// splitmix64. Hand-rolled rather than <random> so that seeded fixtures
/// are identical across standard-library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed = default_seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling to kill modulo bias
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    /// Uniform in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    bool coin() { return (next() & 1u) != 0; }

private:
    std::uint64_t state_;
};

} // namespace hookbasis
