#pragma once

#include <cstdint>
#include <random>

namespace vmfb {

/// Deterministic random stream backed by a single mt19937_64 engine.
///
/// All variate transformations are implemented here (rather than through
/// std::*_distribution) so that a given seed produces bit-identical streams
/// on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t uniform_index(std::uint64_t n);

    /// Standard normal variate (Box-Muller, cosine branch).
    double normal();

    /// Poisson variate with mean lambda >= 0.
    ///
    /// Sequential-search inversion for lambda < 30, Hörmann's PTRS
    /// transformed-rejection sampler for lambda >= 30.
    std::uint64_t poisson(double lambda);

    std::uint64_t raw() { return gen_(); }

private:
    std::uint64_t poisson_inversion(double lambda);
    std::uint64_t poisson_ptrs(double lambda);

    std::mt19937_64 gen_;
};

} // namespace vmfb
