#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sparsereg {

/// Seeded random stream with a fixed, portable draw algorithm.
///
/// All randomness in the library flows through this class so that a given
/// seed reproduces the same values on every run of the same build.  Uniform
/// doubles take the top 53 bits of a mt19937_64 word; normal draws use the
/// Box-Muller transform on two uniforms (no cached second value, no
/// implementation-defined std::*_distribution involved).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller: sqrt(-2 ln u1) * cos(2 pi u2).
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    /// Uniform integer in [lo, hi] (inclusive).
    int uniform_int(int lo, int hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent stream seed from a base seed, splitmix64-style.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace sparsereg
