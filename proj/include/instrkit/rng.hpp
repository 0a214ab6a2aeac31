#pragma once

#include <cstdint>

namespace instrkit {

// SplitMix64 generator. Used instead of <random> engines/distributions so
// that draws are bit-identical across platforms and standard libraries;
// sampled episodes and noisy outputs must reproduce byte-for-byte.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Unbiased draw in [0, n) via rejection; n must be > 0.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }

private:
    std::uint64_t state_;
};

// Derives an independent sub-stream seed. Changing one stream's consumption
// never perturbs another (e.g. the aux-task draws vs the main episode draw).
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream_id) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (stream_id + 1)));
    return g.next();
}

}  // namespace instrkit
