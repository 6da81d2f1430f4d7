#pragma once

#include <cstdint>
#include <random>

#include "eccforge/bigint.hpp"

namespace eccforge {

/// Seedable random source threaded through every stochastic operation.
///
/// All draws are built from raw 64-bit engine output with hand-written
/// transforms, so sequences are identical across standard libraries.
/// A handle is not thread-safe; concurrent workers take their own via fork().
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0);

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform01();

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    BigInt below(const BigInt& bound);

    /// Uniform integer in [lo, hi], inclusive on both ends.
    BigInt between(const BigInt& lo, const BigInt& hi);

    /// Uniform integer with `bits` random bits (top bit not forced).
    BigInt random_bits(unsigned bits);

    double gaussian(double mean, double stdev);

    /// Independent child stream; depends only on this handle's seed and `stream`.
    Rng fork(std::uint64_t stream) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace eccforge
