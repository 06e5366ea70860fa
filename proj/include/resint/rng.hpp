#pragma once

#include <cstdint>

namespace resint {

/// SplitMix64: the fixed 64-bit-state generator behind every "general"
/// coefficient choice in this project. Chosen because its output stream is
/// specified exactly by the algorithm (no distribution objects), so seeded
/// runs are bit-reproducible across platforms and standard libraries.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n) by rejection; no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi].
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }
};

/// k-th trial seed derived from a primary seed. Documented scheme:
/// sm = SplitMix64(seed XOR (k * 0xD1342543DE82EF95)), derived = sm.next().
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
    SplitMix64 g(seed ^ (k * 0xD1342543DE82EF95ULL));
    return g.next();
}

} // namespace resint
