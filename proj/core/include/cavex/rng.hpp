// rng.hpp — Deterministic parameter sampling for reproducible comparisons

#pragma once

#include <cstdint>

namespace cavex {

// splitmix64: identical sequences on every platform, unlike the standard
// distributions whose output is implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // (0, hi]
    double positive_uniform(double hi) { return hi * (1.0 - uniform01()); }

private:
    std::uint64_t state_;
};

}  // namespace cavex
