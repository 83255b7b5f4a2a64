#pragma once

#include <functional>

namespace isodeform {

/// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b] to absolute
/// tolerance abs_tol. All abscissae are interior points, so integrands with
/// an endpoint singularity (after a taming substitution) are never evaluated
/// at the endpoint itself.
///
/// Throws DivergenceError when a sampled value is non-finite or when the
/// bisection depth cap is exceeded without the local error going down --
/// both signal an integrand this scheme cannot represent, in practice a
/// divergent integral. The error carries the offending abscissa; callers
/// integrating in a substituted variable translate it back.
double adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, int max_depth = 48);

/// One non-adaptive 15-point Kronrod panel; returns the integral estimate and
/// writes the embedded-rule error estimate. Building block for cumulative
/// tables where panels are already small.
double gauss_kronrod_panel(const std::function<double(double)>& f, double a,
                           double b, double* error_estimate);

} // namespace isodeform
