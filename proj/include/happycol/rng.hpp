#pragma once

#include <cstdint>

namespace happycol {

/// SplitMix64 (Steele, Lea & Flood), the usual 64-bit mixing generator.
///
/// Every random choice in this library flows through this generator so that
/// a seed fully determines the output. Derived streams (for example the
/// precolouring of an instance) are seeded with successive outputs of a
/// SplitMix64 seeded by the parent seed; experiment run i uses base_seed + i.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Unbiased uniform in [0, bound), bound > 0. Rejects draws below
    /// 2^64 mod bound, then reduces.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

/// index-th derived seed of `seed` (index 0 is the first SplitMix64 output).
inline std::uint64_t subseed(std::uint64_t seed, int index) {
    SplitMix64 g(seed);
    std::uint64_t s = 0;
    for (int i = 0; i <= index; ++i) s = g.next_u64();
    return s;
}

} // namespace happycol
