#pragma once

#include <cstdint>

namespace aimd {

// SplitMix64 (Steele/Lea/Vigna). Chosen over std::mt19937_64 because the
// whole pipeline must be bit-reproducible across platforms, including the
// uniform-double mapping, which the standard distributions do not guarantee.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1), 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }
};

// splitmix64 finalizer; used to derive independent substream seeds
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Stream keys are small documented constants; substreams of one master seed
// are mutually independent for all practical purposes.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t key) {
    return mix64(master ^ mix64(key));
}

namespace stream {
// parameter sampling (utility draws) for a scenario
inline constexpr std::uint64_t params = 0x01;
// per-agent draw streams start here: agent i uses agent_base + i
inline constexpr std::uint64_t agent_base = 0x1000;
// per-sweep-value derived master seeds
inline constexpr std::uint64_t sweep_base = 0x2000;
} // namespace stream

} // namespace aimd
