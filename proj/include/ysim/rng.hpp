#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include "ysim/errors.hpp"

namespace ysim {

// Deterministic random source used by every simulation in the library.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard, and all derived draws below are built from raw 64-bit words with
// explicitly spelled-out arithmetic. Two runs with the same seed therefore
// produce bit-identical results on any conforming platform; none of the
// implementation-defined std::*_distribution adaptors are used.
class rng {
public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1), 53 bits of precision.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in (0, 1].
    double uniform_pos() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). Rejection keeps the draw unbiased.
    std::uint64_t uniform_below(std::uint64_t n) {
        if (n == 0) throw input_error("uniform_below: n must be positive");
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
        std::uint64_t x = engine_();
        while (x >= limit) x = engine_();
        return x % n;
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Geometric on {1, 2, ...} with success probability p: number of trials
    // up to and including the first success. Sampled by inversion.
    std::uint64_t geometric(double p) {
        if (!(p > 0.0) || p > 1.0) throw input_error("geometric: p must be in (0,1]");
        if (p == 1.0) return 1;
        const double u = uniform(); // [0,1): log1p(-u) is finite
        const double r = std::log1p(-u) / std::log1p(-p);
        if (r >= 9.0e18) return static_cast<std::uint64_t>(9.0e18);
        return 1 + static_cast<std::uint64_t>(r);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ysim
