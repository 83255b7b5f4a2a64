#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace isodeform {

/// Radial profile (f, g, h) of a planar deformation in polar form:
///   f(r) -- determinant of the polar-form Jacobian,
///   g(r) -- squared norm of its radial column,
///   h(r) -- squared norm of its angular column.
/// An admissible profile has h strictly increasing from h(0) = 0, f of
/// constant sign and never zero, g > 0, and g*h >= f^2.
struct RadialProfile {
    std::function<double(double)> f;
    std::function<double(double)> g;
    std::function<double(double)> h;
    /// Analytic derivative of h when available; empty for tabulated profiles.
    std::function<double(double)> dh;
    /// Optional stable form of g*h - f^2. Near r = 0 the two products can
    /// agree to all 16 digits and the naive difference is pure cancellation
    /// noise; closed-form profiles supply the exact expression instead.
    std::function<double(double)> gh_minus_f2;
    /// Declared limit of h at r = 0.
    double h0 = 0.0;
    /// Upper radius of validity for sampled checks.
    double r_max = 2.0;
    /// Closed-form profiles carry exact callables; tabulated ones interpolate.
    bool analytic = true;

    /// h'(r): the analytic derivative if present, otherwise a centered
    /// difference with step 1e-6 * r_max.
    double dh_eval(double r) const;

    /// g*h - f^2, via the stable form when available.
    double drift_sq(double r) const {
        return gh_minus_f2 ? gh_minus_f2(r) : g(r) * h(r) - f(r) * f(r);
    }
};

/// Default tolerance for admissibility checks: float-noise level for
/// closed-form profiles, interpolation-noise level for tables.
inline double default_profile_tol(const RadialProfile& p) {
    return p.analytic ? 1e-9 : 1e-5;
}

// --- closed-form registry -------------------------------------------------

/// f = sign*r, g = 1, h = r^2. The profile of the identity map (and of pure
/// rotations); g*h = f^2 holds with equality everywhere.
RadialProfile identity_profile(double sign = +1.0, double r_max = 2.0);

/// f = sign*r, g = 1 + r^2, h = r^2. Unit-pitch spiral profile.
RadialProfile unit_pitch_profile(double sign = +1.0, double r_max = 2.0);

/// h = r^(2k), f = sign * k * r^(2k-1), g = f^2/h + c^2 h. The constant-pitch
/// generalization: the angular drift integrand is exactly c. Requires k > 0.
RadialProfile power_law_profile(double k, double c, double sign = +1.0,
                                double r_max = 2.0);

/// Profile from sampled rows (r, f, g, h) with strictly increasing r > 0,
/// interpolated monotonically. r_max is the last sampled radius.
RadialProfile table_profile(const std::vector<std::array<double, 4>>& rows,
                            double h0 = 0.0);

/// Registry lookup used by the profile file format and the CLI.
/// Known names: "identity" [sign], "unit-pitch-spiral" [sign],
/// "power-law" k c [sign]. Throws ConfigError for unknown names or bad arity.
RadialProfile named_profile(const std::string& name,
                            const std::vector<double>& params,
                            double r_max = 2.0);

} // namespace isodeform
