#include "isodeform/spiral.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "isodeform/interp.hpp"
#include "isodeform/quadrature.hpp"

namespace isodeform {

namespace {

// sqrt(g h - f^2)/h with the admissibility band enforced: values in
// [-tol_domain, 0) are rounding dust and clamp to zero, anything lower is a
// genuine violation.
double drift_integrand(const RadialProfile& p, double r, double tol_domain) {
    double v = p.drift_sq(r);
    if (v < -tol_domain)
        throw DomainError("g h - f^2 is negative beyond tolerance at r = " +
                          std::to_string(r));
    if (v < 0.0) v = 0.0;
    return std::sqrt(v) / p.h(r);
}

double split_radius(const RadialProfile& p) {
    return std::min(1.0, p.r_max) / 4.0;
}

// Integral of the drift integrand over [0, r], singular end tamed by r = s^2.
double drift_integral(const RadialProfile& p, double r, double quad_tol,
                      double tol_domain) {
    const double r_split = split_radius(p);
    const double a = std::min(r, r_split);
    const bool two_pieces = r > r_split;
    const double piece_tol = two_pieces ? 0.5 * quad_tol : quad_tol;

    double total = 0.0;
    if (a > 0.0) {
        auto substituted = [&](double s) {
            return 2.0 * s * drift_integrand(p, s * s, tol_domain);
        };
        try {
            total += adaptive_gauss_kronrod(substituted, 0.0, std::sqrt(a), piece_tol);
        } catch (const DivergenceError& e) {
            const double rr = e.radius() * e.radius();
            throw DivergenceError(std::string(e.what()) +
                                      " at radius " + std::to_string(rr),
                                  rr);
        }
    }
    if (two_pieces) {
        auto plain = [&](double rr) { return drift_integrand(p, rr, tol_domain); };
        try {
            total += adaptive_gauss_kronrod(plain, r_split, r, piece_tol);
        } catch (const DivergenceError& e) {
            throw DivergenceError(std::string(e.what()) + " at radius " +
                                      std::to_string(e.radius()),
                                  e.radius());
        }
    }
    return total;
}

} // namespace

ValidationReport validate_profile(const RadialProfile& profile,
                                  const std::vector<double>& r_grid, double tol) {
    if (r_grid.empty())
        throw ArgumentError("validate_profile: empty radius grid");
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        if (!(r_grid[i] > 0.0) || r_grid[i] > profile.r_max + 1e-12)
            throw ArgumentError("validate_profile: radii must lie in (0, r_max]");
        if (i > 0 && !(r_grid[i] > r_grid[i - 1]))
            throw ArgumentError("validate_profile: radius grid must be strictly increasing");
    }

    ValidationReport report;
    bool seen_h_increasing = false, seen_f_nonvanishing = false,
         seen_f_sign = false, seen_g_positive = false, seen_gh = false;

    if (std::fabs(profile.h0) > tol)
        report.add("h0-zero", 0.0, profile.h0, tol);

    double prev_h = profile.h0;
    double f_sign = 0.0;
    for (double r : r_grid) {
        const double fv = profile.f(r), gv = profile.g(r), hv = profile.h(r);
        if (!std::isfinite(fv) || !std::isfinite(gv) || !std::isfinite(hv))
            throw EvaluationError("profile value is non-finite at r = " +
                                      std::to_string(r),
                                  r);

        if (!seen_h_increasing && !(hv > prev_h)) {
            report.add("h-increasing", r, hv - prev_h, 0.0);
            seen_h_increasing = true;
        }
        prev_h = hv;

        if (!seen_f_nonvanishing && fv == 0.0) {
            report.add("f-nonvanishing", r, fv, 0.0);
            seen_f_nonvanishing = true;
        }
        if (fv != 0.0) {
            if (f_sign == 0.0) f_sign = fv > 0.0 ? 1.0 : -1.0;
            if (!seen_f_sign && fv * f_sign < 0.0) {
                report.add("f-constant-sign", r, fv, 0.0);
                seen_f_sign = true;
            }
        }
        if (!seen_g_positive && !(gv > 0.0)) {
            report.add("g-positive", r, gv, 0.0);
            seen_g_positive = true;
        }
        if (!seen_gh && gv * hv < fv * fv - tol) {
            report.add("gh-ge-f2", r, gv * hv - fv * fv, tol);
            seen_gh = true;
        }
    }
    return report;
}

ValidationReport validate_profile(const RadialProfile& profile) {
    const PolarGrid grid = PolarGrid::standard(profile.r_max);
    return validate_profile(profile, grid.radii, default_profile_tol(profile));
}

double theta_bar(const SpiralSpec& spec, double r, double quad_tol) {
    const RadialProfile& p = spec.profile;
    if (!(r >= 0.0) || r > p.r_max + 1e-12)
        throw ArgumentError("theta_bar: radius must lie in [0, r_max]");
    if (r == 0.0) return 0.0;
    const double tol_domain = default_profile_tol(p);
    return static_cast<double>(spec.eps2) * drift_integral(p, r, quad_tol, tol_domain);
}

PolarMap build_spiral(const SpiralSpec& spec) {
    const RadialProfile& p = spec.profile;
    if (spec.eps1 != 1 && spec.eps1 != -1)
        throw ArgumentError("spiral spec: eps1 must be +1 or -1");
    if (spec.eps2 != 1 && spec.eps2 != -1)
        throw ArgumentError("spiral spec: eps2 must be +1 or -1");

    const PolarGrid grid = PolarGrid::standard(p.r_max);
    const double tol = default_profile_tol(p);
    ValidationReport report = validate_profile(p, grid.radii, tol);

    // Consistency of f with the half-derivative of h, oriented by eps1.
    bool seen_consistency = false;
    for (double r : grid.radii) {
        const double lhs = p.f(r);
        const double rhs = static_cast<double>(spec.eps1) * 0.5 * p.dh_eval(r);
        if (!seen_consistency &&
            std::fabs(lhs - rhs) > tol * (1.0 + std::fabs(lhs))) {
            report.add("f-eq-eps1-dh-half", r, lhs - rhs,
                       tol * (1.0 + std::fabs(lhs)));
            seen_consistency = true;
        }
    }
    if (!report.passed)
        throw ValidationFailure("profile failed admissibility checks", report);

    // Cache the angular drift on a dense uniform table in s = sqrt(r); the
    // substituted integrand 2 s * I(s^2) is smooth there, and exact nodal
    // slopes make the Hermite interpolation error ~O(ds^4), i.e. negligible.
    const double tol_domain = tol;
    const double s_max = std::sqrt(p.r_max * 1.0501);
    const std::size_t n_cells = 2048;
    const double ds = s_max / static_cast<double>(n_cells);

    auto substituted = [&p, tol_domain](double s) {
        return 2.0 * s * drift_integrand(p, s * s, tol_domain);
    };

    std::vector<double> values(n_cells + 1), slopes(n_cells + 1);
    values[0] = 0.0;
    slopes[0] = substituted(1e-6 * ds); // finite limit for integrable drift
    try {
        // First cell adaptively: this is where a divergent profile shows up.
        values[1] = adaptive_gauss_kronrod(substituted, 0.0, ds, 1e-13);
        slopes[1] = substituted(ds);
        for (std::size_t i = 1; i < n_cells; ++i) {
            const double a = ds * static_cast<double>(i);
            const double b = a + ds;
            double err = 0.0;
            double cell = gauss_kronrod_panel(substituted, a, b, &err);
            if (err > 1e-12)
                cell = adaptive_gauss_kronrod(substituted, a, b, 1e-13);
            values[i + 1] = values[i] + cell;
            slopes[i + 1] = substituted(b);
        }
    } catch (const DivergenceError& e) {
        const double rr = e.radius() * e.radius();
        throw DivergenceError(std::string(e.what()) + " at radius " +
                                  std::to_string(rr),
                              rr);
    }
    auto drift = std::make_shared<CubicHermiteTable>(0.0, ds, std::move(values),
                                                     std::move(slopes));

    const double eps1 = static_cast<double>(spec.eps1);
    const double eps2 = static_cast<double>(spec.eps2);
    const double theta0 = spec.theta0;

    PolarMap map;
    map.r_max = p.r_max;
    map.R = [p](double r, double) { return std::sqrt(p.h(r)); };
    map.Theta = [drift, eps1, eps2, theta0](double r, double theta) {
        return eps1 * theta + theta0 + eps2 * (*drift)(std::sqrt(r));
    };

    PolarMap::AnalyticPartials partials;
    partials.dr_R = [p](double r, double) {
        return p.dh_eval(r) / (2.0 * std::sqrt(p.h(r)));
    };
    partials.dtheta_R = [](double, double) { return 0.0; };
    partials.dr_Theta = [p, eps2, tol_domain](double r, double) {
        return eps2 * drift_integrand(p, r, tol_domain);
    };
    partials.dtheta_Theta = [eps1](double, double) { return eps1; };
    map.partials = std::move(partials);
    return map;
}

} // namespace isodeform
