#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace rph {

/// Reproducible random source, version 1.
///
/// Engine: std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Each (seed, stream) pair is seeded with splitmix64 applied to
/// seed and then to seed ^ stream-mix, so independent components draw from
/// independent substreams. Uniforms take the top 53 bits of one output;
/// normals use the cosine branch of Box-Muller on two fresh uniforms.
/// Changing any of this changes every generated cloud and must bump the
/// version.
class Rng {
public:
    static constexpr int kVersion = 1;

    Rng(std::uint64_t seed, std::uint64_t stream)
        : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL))) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal(double mean, double sd) {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rph
