#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace neurodvfs {

/// SplitMix64 finalizer. Used both as a stream generator and as a
/// counter-based hash so results do not depend on the standard library's
/// distribution implementations.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash_counter(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept
{
    return mix64(mix64(mix64(seed) ^ a) ^ (b * 0xD1B54A32D192ED03ULL));
}

/// Maps 64 random bits to a double in [0, 1).
constexpr double to_unit(std::uint64_t bits) noexcept
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Standard normal variate for counter (seed, a, b); Box-Muller on two hashed uniforms.
inline double normal_at(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept
{
    const double u1 = 1.0 - to_unit(hash_counter(seed, a, 2 * b));
    const double u2 = to_unit(hash_counter(seed, a, 2 * b + 1));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Sequential generator for network construction.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(mix64(seed ^ 0x5DEECE66DULL)) {}

    std::uint64_t next() noexcept
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform() noexcept { return to_unit(next()); }

    bool bernoulli(double p) noexcept { return uniform() < p; }

    /// Uniform integer in [0, n), unbiased by rejection.
    std::uint64_t below(std::uint64_t n) noexcept
    {
        if (n == 0) {
            return 0;
        }
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) {
                return r % n;
            }
        }
    }

    double normal() noexcept
    {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

} // namespace neurodvfs
