#include "isodeform/quadrature.hpp"

#include <cmath>

#include "isodeform/errors.hpp"

namespace isodeform {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK abscissae,
// right half; the rule is symmetric).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

// Gauss weights of the embedded 7-point rule (odd-index Kronrod abscissae).
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

double panel(const std::function<double(double)>& f, double a, double b,
             double* err) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(center - half * kXgk[i]);
        fv[14 - i] = f(center + half * kXgk[i]);
    }
    fv[7] = f(center);

    for (int i = 0; i < 15; ++i) {
        if (!std::isfinite(fv[i])) {
            const double x = (i < 7)   ? center - half * kXgk[i]
                             : (i > 7) ? center + half * kXgk[14 - i]
                                       : center;
            throw DivergenceError("integrand is non-finite", x);
        }
    }

    double kronrod = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kronrod += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1)
            gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    kronrod *= half;
    gauss *= half;

    // QUADPACK-style sharpened estimate of the Kronrod error.
    const double diff = std::fabs(kronrod - gauss);
    *err = diff;
    if (diff > 0.0) {
        const double scaled = std::pow(200.0 * diff, 1.5);
        if (scaled < diff) *err = scaled;
    }
    return kronrod;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int depth, int max_depth) {
    double err = 0.0;
    const double whole = panel(f, a, b, &err);
    if (err <= tol || err <= 1e-17 * std::fabs(whole))
        return whole;
    if (depth >= max_depth)
        throw DivergenceError("quadrature failed to converge (integral likely divergent)",
                              0.5 * (a + b));
    const double mid = 0.5 * (a + b);
    return integrate(f, a, mid, 0.5 * tol, depth + 1, max_depth) +
           integrate(f, mid, b, 0.5 * tol, depth + 1, max_depth);
}

} // namespace

double gauss_kronrod_panel(const std::function<double(double)>& f, double a,
                           double b, double* error_estimate) {
    double err = 0.0;
    const double v = panel(f, a, b, &err);
    if (error_estimate) *error_estimate = err;
    return v;
}

double adaptive_gauss_kronrod(const std::function<double(double)>& f, double a,
                              double b, double abs_tol, int max_depth) {
    if (!(b > a)) return 0.0;
    if (!(abs_tol > 0.0))
        throw ArgumentError("quadrature tolerance must be positive");
    return integrate(f, a, b, abs_tol, 0, max_depth);
}

} // namespace isodeform
