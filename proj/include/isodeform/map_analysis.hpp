#pragma once

#include <array>
#include <vector>

#include "isodeform/polar_map.hpp"
#include "isodeform/radial_profile.hpp"

namespace isodeform {

struct PolarPartials {
    double dr_R = 0.0;
    double dtheta_R = 0.0;
    double dr_Theta = 0.0;
    double dtheta_Theta = 0.0;
};

/// The four partials of a polar map at (r, theta). Analytic scheme requires
/// the map to carry partials (CapabilityError otherwise). Central differences
/// are second order; angular differences are reduced to the principal branch,
/// so maps whose Theta jumps across the atan2 cut are differenced correctly
/// provided the true variation over one step stays below pi.
PolarPartials partials(const PolarMap& map, double r, double theta,
                       const DiffScheme& scheme);

/// Determinant of the polar-form Jacobian at (r, theta):
///   R * (dr_R * dtheta_Theta - dtheta_R * dr_Theta).
/// Radial (equal to the profile's f) exactly when the map is a spiral.
double polarform_det(const PolarMap& map, double r, double theta,
                     const DiffScheme& scheme);

struct EquationResidual {
    double max_abs = 0.0;
    double rms = 0.0;
    double argmax_r = 0.0;
    double argmax_theta = 0.0;
};

/// Residuals of the three profile equations over a grid:
///   det:     f - R dr_R dtheta_Theta + R dtheta_R dr_Theta
///   radial:  g - (dr_R)^2 - (R dr_Theta)^2
///   angular: h - (dtheta_R)^2 - (R dtheta_Theta)^2
struct FghResiduals {
    EquationResidual det, radial, angular;
    double max_abs() const;
};

FghResiduals fgh_residuals(const PolarMap& map, const RadialProfile& profile,
                           const PolarGrid& grid, const DiffScheme& scheme);

/// Pointwise profile estimates recovered from the partials, plus a radiality
/// metric per quantity: max over r of (spread over theta) / (|mean| + 1e-12).
/// Zero for maps whose Jacobian geometry is genuinely radial.
struct FghField {
    std::vector<double> radii, thetas;
    std::vector<double> f, g, h; // row-major, [ir * ntheta + it]
    double f_radiality = 0.0, g_radiality = 0.0, h_radiality = 0.0;

    double at_f(std::size_t ir, std::size_t it) const { return f[ir * thetas.size() + it]; }
    double at_g(std::size_t ir, std::size_t it) const { return g[ir * thetas.size() + it]; }
    double at_h(std::size_t ir, std::size_t it) const { return h[ir * thetas.size() + it]; }
};

FghField extract_fgh(const PolarMap& map, const PolarGrid& grid,
                     const DiffScheme& scheme);

/// Angle-field decomposition of the partials at a point:
///   dr_R       = sqrt(g) cos(Phi)
///   R dr_Theta = sqrt(g) sin(Phi)
///   dtheta_R       = (-1)^p sqrt((gh - f^2)/g) cos(Phi) - (f/sqrt(g)) sin(Phi)
///   R dtheta_Theta = (-1)^p sqrt((gh - f^2)/g) sin(Phi) + (f/sqrt(g)) cos(Phi)
/// Phi = atan2(R dr_Theta, dr_R); parity p in {0, 1} picked to minimize the
/// defect of the last two equations. residual is the max defect of all four.
struct PhiDecomposition {
    double phi = 0.0;
    int parity = 0;
    double residual = 0.0;
};

PhiDecomposition phi_decomposition(const PolarMap& map, const RadialProfile& profile,
                                   double r, double theta, const DiffScheme& scheme);

/// Residuals of the first-order transport system with radial coefficients
///   alpha = (-1)^p sqrt(gh - f^2)/g,  beta = f/g:
///   dtheta_R       - alpha dr_R       + beta R dr_Theta
///   R dtheta_Theta - alpha R dr_Theta - beta dr_R
/// beta must have constant sign on the grid; when it is negative the profile
/// determinant is reoriented (f -> -f) and orientation records the flip.
struct HyperbolicResiduals {
    EquationResidual radial_eq, angular_eq;
    int orientation = +1;
    double max_abs() const;
};

HyperbolicResiduals hyperbolic_residuals(const PolarMap& map,
                                         const RadialProfile& profile, int parity,
                                         const PolarGrid& grid,
                                         const DiffScheme& scheme);

/// Verdict of the spiral test: is the sampled map of the form
/// R = cal_R(r), Theta = eps1 * theta + bar_Theta(r)?
struct SpiralVerdict {
    bool is_spiral = false;
    int eps1 = +1;
    double theta0 = 0.0;
    int winding = +1;
    std::vector<std::array<double, 2>> r_profile;         // (r, mean_theta R)
    std::vector<std::array<double, 2>> theta_bar_profile; // (r, mean_theta (Theta - eps1 theta))
    struct Diagnostics {
        double r_radiality = 0.0;      // max_r spread/( |mean|+1e-12 ) of R
        double theta_radiality = 0.0;  // same for Theta - eps1*theta
        double r_max_spread = 0.0;     // max_r raw spread of R
        double theta_max_spread = 0.0;
    } diagnostics;
};

/// Classifies a map as spiral or not on a grid covering the full circle at
/// each radius. eps1 is the unanimous sign of dtheta_Theta over the grid
/// (ClassificationError if the sign flips); theta0 extrapolates the angular
/// drift linearly to r = 0 from the two smallest radii.
SpiralVerdict classify_spiral(const PolarMap& map, const PolarGrid& grid,
                              const DiffScheme& scheme, double tol);

} // namespace isodeform
