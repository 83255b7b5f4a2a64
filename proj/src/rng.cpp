#include "isodeform/rng.hpp"

#include <cmath>

#include "isodeform/errors.hpp"

namespace isodeform {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double SplitMix64::next_angle() { return kTwoPi * next_double(); }

double SplitMix64::next_normal() {
    const double u1 = next_open();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double SplitMix64::next_gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw ArgumentError("gamma law: shape and scale must be positive");
    if (shape < 1.0) {
        // Boost: Gamma(a) = Gamma(a+1) * U^(1/a).
        const double u = next_open();
        return next_gamma(shape + 1.0, scale) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = next_open();
        if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SplitMix64 replicate_stream(std::uint64_t base_seed, std::uint64_t replicate_index) {
    const std::uint64_t key =
        mix64(base_seed ^ mix64(replicate_index + 0x632BE59BD9B4E019ULL));
    return SplitMix64(key);
}

} // namespace isodeform
