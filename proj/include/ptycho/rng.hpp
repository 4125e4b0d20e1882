#pragma once

#include <cstdint>
#include <random>

namespace ptycho::rng {

// Derives an independent substream seed from a base seed and a stream id.
// splitmix64 mixing; identical output on every platform.
std::uint64_t mix(std::uint64_t seed, std::uint64_t stream_id);

// Deterministic random stream. All distributions are implemented by hand on
// top of mt19937_64 so that results are bit-identical across standard
// libraries (std::*_distribution is implementation-defined).
class Stream {
public:
    explicit Stream(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform();
    // Uniform in [lo, hi).
    double uniform(double lo, double hi);
    // Uniform integer in [0, bound).
    std::uint64_t integer(std::uint64_t bound);
    // Standard normal via Box-Muller.
    double normal();
    // Exact Poisson sample: Knuth multiplication for small means,
    // Hormann's PTRS transformed rejection for large ones.
    std::int64_t poisson(double mean);

private:
    std::mt19937_64 engine_;
};

} // namespace ptycho::rng
