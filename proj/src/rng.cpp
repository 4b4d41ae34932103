#include "vmfb/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vmfb {

double Rng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("Rng::uniform: empty range");
    return lo + (hi - lo) * uniform();
}

std::uint64_t Rng::uniform_index(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::uniform_index: n == 0");
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
    std::uint64_t v;
    do {
        v = gen_();
    } while (v >= limit);
    return v % n;
}

double Rng::normal() {
    // Box-Muller; u1 shifted away from 0 so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t Rng::poisson(double lambda) {
    if (lambda < 0.0 || !std::isfinite(lambda))
        throw std::invalid_argument("Rng::poisson: lambda must be finite and >= 0");
    if (lambda == 0.0) return 0;
    return lambda < 30.0 ? poisson_inversion(lambda) : poisson_ptrs(lambda);
}

std::uint64_t Rng::poisson_inversion(double lambda) {
    const double u = uniform();
    double p = std::exp(-lambda);
    double cdf = p;
    std::uint64_t k = 0;
    // Hard cap far in the tail; accumulated rounding can otherwise stall the
    // scan when u is extremely close to 1.
    const std::uint64_t cap =
        static_cast<std::uint64_t>(lambda + 40.0 * std::sqrt(lambda) + 128.0);
    while (u > cdf && k < cap) {
        ++k;
        p *= lambda / static_cast<double>(k);
        cdf += p;
    }
    return k;
}

std::uint64_t Rng::poisson_ptrs(double lambda) {
    // Hörmann's PTRS: transformed rejection with squeeze, valid for lambda >= 10.
    const double slam = std::sqrt(lambda);
    const double loglam = std::log(lambda);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        const double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::abs(u);
        const double kd = std::floor((2.0 * a / us + b) * u + lambda + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kd);
        if (kd < 0.0 || (us < 0.013 && v > us)) continue;
        const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
        const double rhs = kd * loglam - lambda - std::lgamma(kd + 1.0);
        if (lhs <= rhs) return static_cast<std::uint64_t>(kd);
    }
}

} // namespace vmfb
