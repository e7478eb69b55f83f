#pragma once

#include <cstdint>
#include <random>

namespace pointssim {

/// Seeded random stream built on std::mt19937_64, with value derivation done
/// locally so sequences do not depend on standard-library distribution
/// internals. Realization streams are split per index: stream k is seeded
/// with splitmix64(seed + k * 0x9E3779B97F4A7C15), so realization k is
/// reproducible independently of realizations 0..k-1.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);
    static Rng stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(split_seed(seed, index));
    }

    /// Uniform double in [0, 1).
    double uniform();
    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer in [0, n); n >= 1.
    std::uint64_t uniform_index(std::uint64_t n);
    /// Standard normal via Box-Muller (two uniforms per draw).
    double normal();

private:
    std::mt19937_64 engine_;
};

}  // namespace pointssim
