#include "ptycho/rng.hpp"

#include <cmath>

namespace ptycho::rng {

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream_id) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream_id + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Stream::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Stream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t Stream::integer(std::uint64_t bound) {
    // Rejection to avoid modulo bias.
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double Stream::normal() {
    double u1;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::int64_t Stream::poisson(double mean) {
    if (mean <= 0.0) return 0;
    if (mean < 30.0) {
        // Knuth: multiply uniforms until the product drops below exp(-mean).
        const double threshold = std::exp(-mean);
        std::int64_t k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > threshold);
        return k - 1;
    }
    // PTRS transformed rejection (Hormann 1993), exact for large means.
    const double slam = std::sqrt(mean);
    const double llam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double vr = 0.9277 - 3.6224 / (b - 2.0);
    while (true) {
        const double u = uniform() - 0.5;
        const double v = uniform();
        const double us = 0.5 - std::abs(u);
        const auto k = static_cast<std::int64_t>(std::floor((2.0 * a / us + b) * u + mean + 0.43));
        if (us >= 0.07 && v <= vr) return k;
        if (k < 0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * llam - mean - std::lgamma(static_cast<double>(k) + 1.0)) {
            return k;
        }
    }
}

} // namespace ptycho::rng
