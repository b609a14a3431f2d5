#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace gmpb {

/// Deterministic random source. One instance drives a whole benchmark run
/// (initialization, dynamics, optimizer), so a (seed, draw script) pair
/// reproduces the trajectory exactly.
///
/// Generator: std::mt19937_64, whose raw output is fully specified by the
/// standard and therefore bit-exact across implementations. Uniform doubles
/// come from the top 53 bits of the raw output, Gaussians from the Box-Muller
/// polar transform with the second value cached. Nothing uses <random>
/// distributions (their output is implementation-defined).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed)
        : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Raw 64-bit draw.
    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0,1), 53-bit resolution.
    double next_unit();

    /// Uniform double in [lo,hi); lo == hi yields lo.
    /// Throws std::invalid_argument when lo > hi.
    double next_uniform(double lo, double hi);

    /// Uniform integer in [0,n), n > 0.
    std::uint64_t next_below(std::uint64_t n);

    /// Uniform integer in [lo,hi], both ends inclusive.
    long long next_int(long long lo, long long hi);

    /// Standard normal via the polar Box-Muller transform: draw a uniform
    /// pair in [-1,1)^2, reject outside the unit disc, emit one value and
    /// cache the other for the next call.
    double next_gaussian();

    /// Uniform permutation of {0..n-1}; Fisher-Yates, exactly n-1 bounded
    /// draws.
    std::vector<std::size_t> next_permutation(std::size_t n);

    bool gaussian_cached() const { return cached_gaussian_.has_value(); }

    friend bool operator==(const RandomSource&, const RandomSource&) = default;

private:
    std::uint64_t seed_ = 0;
    std::mt19937_64 engine_;
    std::optional<double> cached_gaussian_;
};

} // namespace gmpb
