#pragma once

#include <cstdint>

#include "pvilab/rational.hpp"

namespace pvilab {

// splitmix64: tiny deterministic generator, identical output on every
// platform (std::uniform_int_distribution is not portable).
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] inclusive (modulo bias irrelevant here).
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational rational(long num_bound, long den_bound) {
        return rat(range(-num_bound, num_bound), range(1, den_bound));
    }
};

}  // namespace pvilab
