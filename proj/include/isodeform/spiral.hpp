#pragma once

#include <string>
#include <vector>

#include "isodeform/errors.hpp"
#include "isodeform/polar_map.hpp"
#include "isodeform/radial_profile.hpp"

namespace isodeform {

/// Parameters of the closed-form spiral construction built on an admissible
/// radial profile. eps1 fixes orientation (Theta carries +theta or -theta),
/// eps2 the turning sense of the radial drift, theta0 the phase at r = 0.
/// Consistency requirement: f(r) = eps1 * h'(r) / 2 on the validation grid.
struct SpiralSpec {
    int eps1 = +1;
    int eps2 = +1;
    double theta0 = 0.0;
    RadialProfile profile;
};

struct Violation {
    std::string condition; // e.g. "h-increasing", "gh-ge-f2"
    double radius = 0.0;
    double measured = 0.0;
    double tolerance = 0.0;
};

struct ValidationReport {
    bool passed = true;
    std::vector<Violation> violations; // passed <=> violations empty

    void add(std::string condition, double radius, double measured, double tol) {
        violations.push_back({std::move(condition), radius, measured, tol});
        passed = false;
    }
};

/// Thrown when a build requires a valid profile but validation failed;
/// carries the full report for diagnostics.
class ValidationFailure : public Error {
public:
    ValidationFailure(const std::string& what, ValidationReport report)
        : Error(what), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Checks admissibility on a strictly increasing grid of radii in
/// (0, r_max]: h strictly increasing with h0 = 0, f of constant sign and
/// never zero, g > 0, and g*h >= f^2 - tol pointwise. Reports the first
/// failing radius per condition.
ValidationReport validate_profile(const RadialProfile& profile,
                                  const std::vector<double>& r_grid, double tol);

/// Same, with the profile's default tolerance and a standard 64-point
/// geometric grid on (0.05 * r_max, r_max].
ValidationReport validate_profile(const RadialProfile& profile);

/// Angular drift of the spiral at radius r:
///   eps2 * integral_0^r sqrt(g h - f^2) / h dr*.
/// The integrand may blow up like r^(-1/2) at 0; the initial interval
/// [0, min(1, r_max)/4] is integrated under the substitution r = s^2, which
/// turns that into a bounded integrand. Absolute error <= quad_tol.
///
/// Throws DomainError if g h - f^2 < -tol_domain at a sampled radius (small
/// negatives within tol_domain are clamped to zero), DivergenceError if the
/// integral does not converge for this profile.
double theta_bar(const SpiralSpec& spec, double r, double quad_tol = 1e-10);

/// Builds the spiral map
///   R(r, theta)     = sqrt(h(r))
///   Theta(r, theta) = eps1 * theta + theta0 + theta_bar(r)
/// with analytic partials attached:
///   dr_R = h' / (2 sqrt(h)),  dtheta_R = 0,
///   dr_Theta = eps2 * sqrt(g h - f^2) / h,  dtheta_Theta = eps1.
/// The angular drift is cached on a dense radial table at build time, so map
/// evaluation is O(1); table error is at interpolation noise level (~1e-14).
///
/// Throws ValidationFailure if the profile fails admissibility or the
/// f = eps1*h'/2 consistency check; propagates divergence errors.
PolarMap build_spiral(const SpiralSpec& spec);

} // namespace isodeform
