#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "isodeform/rng.hpp"

namespace isodeform {

/// Distribution of the frequency magnitude rho >= 0.
struct RadialLaw {
    enum class Kind { FixedRing, Rayleigh, Gamma };
    Kind kind = Kind::FixedRing;
    double p0 = 1.0; // rho0 | sigma | shape
    double p1 = 0.0; // -    | -     | scale

    static RadialLaw fixed_ring(double rho0);
    static RadialLaw rayleigh(double sigma);
    static RadialLaw gamma_law(double shape, double scale);
    /// Registry lookup: "fixed-ring" [rho0], "rayleigh" [sigma],
    /// "gamma" [shape, scale]. ConfigError on unknown name or bad arity.
    static RadialLaw from_name(const std::string& name, std::span<const double> params);

    double sample(SplitMix64& rng) const;
    std::string name() const;
};

/// Specification of the random-field ensemble. The synthesized field
///   X(t) = sqrt(2/n) * sum_i cos(<w_i, t> + phi_i)
/// with directions uniform on the circle is exactly stationary and exactly
/// rotation-invariant in law for every n; it is Gaussian only in the n -> inf
/// limit (n = 200 is the working default).
struct SpectralFieldSpec {
    RadialLaw law;
    int n_harmonics = 200;
    std::uint64_t base_seed = 0;
};

/// One realization: frozen frequencies and phases, evaluatable anywhere.
class FieldSample {
public:
    FieldSample(std::vector<double> wx, std::vector<double> wy,
                std::vector<double> phase, double amplitude);

    double operator()(double x, double y) const;

    double amplitude() const { return amplitude_; }
    std::size_t size() const { return wx_.size(); }
    std::span<const double> wx() const { return wx_; }
    std::span<const double> wy() const { return wy_; }
    std::span<const double> phase() const { return phase_; }

private:
    std::vector<double> wx_, wy_, phase_;
    double amplitude_;
};

/// Draws replicate `replicate_index` of the ensemble. Randomness comes from a
/// counter-based stream keyed by (base_seed, replicate_index): replicates are
/// reproducible and independent of evaluation order. Per harmonic the draw
/// order is rho, direction angle, phase.
FieldSample sample_field(const SpectralFieldSpec& spec, std::uint64_t replicate_index);

} // namespace isodeform
