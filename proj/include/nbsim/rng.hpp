#pragma once

#include <cstdint>

namespace nbsim {

/// SplitMix64 generator. Chosen over std::mt19937_64 plus the standard
/// distributions because distribution output is implementation-defined;
/// this generator's stream is fully specified, so seeded runs reproduce
/// bit-identically everywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 bits of precision.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + next_unit() * (hi - lo); }

private:
    std::uint64_t state_;
};

}  // namespace nbsim
