#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace isodeform {

/// A planar deformation in polar form: (r, theta) -> (R, Theta).
/// Theta is an unwrapped angle (a real number, not reduced mod 2*pi);
/// reduction happens only where two angles are compared. Maps must satisfy
/// R(r, theta + 2*pi) = R(r, theta) and Theta(r, theta + 2*pi) =
/// Theta(r, theta) + 2*pi*k for a fixed integer winding k.
struct PolarMap {
    std::function<double(double, double)> R;
    std::function<double(double, double)> Theta;

    struct AnalyticPartials {
        std::function<double(double, double)> dr_R;
        std::function<double(double, double)> dtheta_R;
        std::function<double(double, double)> dr_Theta;
        std::function<double(double, double)> dtheta_Theta;
    };
    std::optional<AnalyticPartials> partials;

    double r_max = 2.0;

    bool has_analytic_partials() const { return partials.has_value(); }
};

/// Differentiation scheme for map evaluation.
struct DiffScheme {
    enum class Kind { Analytic, Central };
    Kind kind = Kind::Analytic;
    double step = 1e-5;

    static DiffScheme analytic() { return {Kind::Analytic, 0.0}; }
    static DiffScheme central(double step) { return {Kind::Central, step}; }
};

/// Evaluation lattice: radii strictly increasing, angles uniform on [0, 2*pi).
struct PolarGrid {
    std::vector<double> radii;
    std::vector<double> thetas;

    /// Geometric radii from r_lo to r_hi (resolves the near-origin region
    /// without wasting points), uniform angles covering the full circle.
    static PolarGrid geometric(double r_lo, double r_hi, std::size_t nr,
                               std::size_t ntheta);

    /// The default lattice: 64 geometric radii from 0.05*r_max, 64 angles.
    static PolarGrid standard(double r_max, std::size_t nr = 64,
                              std::size_t ntheta = 64);
};

/// Polar form of the linear map (x, y) -> (a11 x + a12 y, a21 x + a22 y),
/// with analytic partials. Requires det != 0. Handy as a non-spiral foil:
/// anisotropic scalings and shears are linear maps.
PolarMap linear_polar_map(double a11, double a12, double a21, double a22);

} // namespace isodeform
