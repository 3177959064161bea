#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace laptab {

/// SplitMix64 (Steele, Lea, Flood 2014) with its published constants.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed = 0)
        : state_(seed)
    {
    }

    static constexpr std::uint64_t finalize(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next()
    {
        state_ += kGamma;
        return finalize(state_);
    }

    /// Uniform in [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, bound) by 128-bit multiply-high.
    std::uint64_t below(std::uint64_t bound)
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Standard normal by Box-Muller (one draw per call, the sine branch is discarded).
    double normal()
    {
        double u1 = uniform01();
        while (u1 <= 0.0)
            u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

/// Per-instance seed: a pure function of (seed, index), so instance i is the
/// same regardless of which worker draws it or in what order.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    return SplitMix64::finalize(seed ^ SplitMix64::finalize(index + SplitMix64::kGamma));
}

} // namespace laptab
