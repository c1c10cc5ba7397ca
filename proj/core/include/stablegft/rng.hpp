#pragma once

#include <cstdint>

namespace stablegft {

/// SplitMix64 generator (Vigna's public-domain mixer). Chosen over
/// std::mt19937_64 because the output sequence is fixed by this header alone,
/// so seeded Monte Carlo ensembles reproduce bit-for-bit on every platform
/// and standard library. Each call advances the state by a fixed increment
/// and returns a mix of it, which also makes per-trial streams cheap:
/// SplitMix64(seed + trial) gives independent-enough streams for graph
/// sampling.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), using the top 53 bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace stablegft
