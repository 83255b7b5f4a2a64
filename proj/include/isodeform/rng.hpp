#pragma once

#include <cstdint>

namespace isodeform {

/// splitmix64 stream. Counter-based at heart (the state advances by a fixed
/// Weyl increment), so a stream keyed by (seed, index) is reproducible and
/// independent of which other streams were drawn first. All distribution
/// helpers below are implemented from raw bits with plain arithmetic only --
/// no std::*_distribution, whose output is implementation-defined.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe under log().
    double next_open() { return 1.0 - next_double(); }

    /// Uniform angle on [0, 2*pi).
    double next_angle();

    /// Standard normal (Box-Muller; draws two uniforms, discards the mate).
    double next_normal();

    /// Gamma(shape, scale) by Marsaglia-Tsang squeeze, boosted for shape < 1.
    double next_gamma(double shape, double scale);

private:
    std::uint64_t state_;
};

/// 64-bit finalizer used to derive stream keys.
std::uint64_t mix64(std::uint64_t x);

/// Stream for one replicate: keyed by (base_seed, replicate_index), distinct
/// indices give decorrelated streams regardless of draw order.
SplitMix64 replicate_stream(std::uint64_t base_seed, std::uint64_t replicate_index);

} // namespace isodeform
