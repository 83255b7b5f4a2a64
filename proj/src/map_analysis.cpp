#include "isodeform/map_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isodeform/errors.hpp"

namespace isodeform {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Difference of two angle samples reduced to the principal branch. Valid as
// long as the true variation between the samples is below pi, which holds for
// the small steps used by difference schemes.
double angle_diff(double a, double b) { return std::remainder(a - b, kTwoPi); }

struct ResidualAccumulator {
    EquationResidual out;
    double sum_sq = 0.0;
    std::size_t count = 0;

    void add(double value, double r, double theta) {
        const double a = std::fabs(value);
        if (a > out.max_abs) {
            out.max_abs = a;
            out.argmax_r = r;
            out.argmax_theta = theta;
        }
        sum_sq += value * value;
        ++count;
    }
    EquationResidual finish() {
        out.rms = count ? std::sqrt(sum_sq / static_cast<double>(count)) : 0.0;
        return out;
    }
};

double clamped_drift_sq(const RadialProfile& profile, double r) {
    double v = profile.drift_sq(r);
    const double tol = default_profile_tol(profile);
    if (v < -tol)
        throw DomainError("g h - f^2 is negative beyond tolerance at r = " +
                          std::to_string(r));
    return v < 0.0 ? 0.0 : v;
}

} // namespace

PolarPartials partials(const PolarMap& map, double r, double theta,
                       const DiffScheme& scheme) {
    PolarPartials out;
    if (scheme.kind == DiffScheme::Kind::Analytic) {
        if (!map.has_analytic_partials())
            throw CapabilityError("analytic partials requested but the map carries none");
        const auto& p = *map.partials;
        out.dr_R = p.dr_R(r, theta);
        out.dtheta_R = p.dtheta_R(r, theta);
        out.dr_Theta = p.dr_Theta(r, theta);
        out.dtheta_Theta = p.dtheta_Theta(r, theta);
        return out;
    }
    const double s = scheme.step;
    if (!(s > 0.0))
        throw ArgumentError("central-difference scheme needs a positive step");
    if (!(r > s) || r + s > map.r_max + 1e-12)
        throw ArgumentError("central differences need r in (step, r_max - step)");
    out.dr_R = (map.R(r + s, theta) - map.R(r - s, theta)) / (2.0 * s);
    out.dtheta_R = (map.R(r, theta + s) - map.R(r, theta - s)) / (2.0 * s);
    out.dr_Theta = angle_diff(map.Theta(r + s, theta), map.Theta(r - s, theta)) / (2.0 * s);
    out.dtheta_Theta =
        angle_diff(map.Theta(r, theta + s), map.Theta(r, theta - s)) / (2.0 * s);
    return out;
}

double polarform_det(const PolarMap& map, double r, double theta,
                     const DiffScheme& scheme) {
    const PolarPartials p = partials(map, r, theta, scheme);
    return map.R(r, theta) * (p.dr_R * p.dtheta_Theta - p.dtheta_R * p.dr_Theta);
}

double FghResiduals::max_abs() const {
    return std::max({det.max_abs, radial.max_abs, angular.max_abs});
}

FghResiduals fgh_residuals(const PolarMap& map, const RadialProfile& profile,
                           const PolarGrid& grid, const DiffScheme& scheme) {
    ResidualAccumulator det_acc, radial_acc, angular_acc;
    for (double r : grid.radii) {
        const double fv = profile.f(r), gv = profile.g(r), hv = profile.h(r);
        if (!std::isfinite(fv) || !std::isfinite(gv) || !std::isfinite(hv))
            throw EvaluationError("profile value is non-finite at r = " +
                                      std::to_string(r),
                                  r);
        for (double theta : grid.thetas) {
            const PolarPartials p = partials(map, r, theta, scheme);
            const double R = map.R(r, theta);
            det_acc.add(fv - R * p.dr_R * p.dtheta_Theta + R * p.dtheta_R * p.dr_Theta,
                        r, theta);
            radial_acc.add(gv - p.dr_R * p.dr_R - (R * p.dr_Theta) * (R * p.dr_Theta),
                           r, theta);
            angular_acc.add(
                hv - p.dtheta_R * p.dtheta_R - (R * p.dtheta_Theta) * (R * p.dtheta_Theta),
                r, theta);
        }
    }
    FghResiduals out;
    out.det = det_acc.finish();
    out.radial = radial_acc.finish();
    out.angular = angular_acc.finish();
    return out;
}

FghField extract_fgh(const PolarMap& map, const PolarGrid& grid,
                     const DiffScheme& scheme) {
    FghField out;
    out.radii = grid.radii;
    out.thetas = grid.thetas;
    const std::size_t nt = grid.thetas.size();
    out.f.resize(grid.radii.size() * nt);
    out.g.resize(out.f.size());
    out.h.resize(out.f.size());

    auto radiality = [](const std::vector<double>& row) {
        const auto [lo, hi] = std::minmax_element(row.begin(), row.end());
        double mean = 0.0;
        for (double v : row) mean += v;
        mean /= static_cast<double>(row.size());
        return (*hi - *lo) / (std::fabs(mean) + 1e-12);
    };

    std::vector<double> f_row(nt), g_row(nt), h_row(nt);
    for (std::size_t ir = 0; ir < grid.radii.size(); ++ir) {
        const double r = grid.radii[ir];
        for (std::size_t it = 0; it < nt; ++it) {
            const double theta = grid.thetas[it];
            const PolarPartials p = partials(map, r, theta, scheme);
            const double R = map.R(r, theta);
            f_row[it] = R * (p.dr_R * p.dtheta_Theta - p.dtheta_R * p.dr_Theta);
            g_row[it] = p.dr_R * p.dr_R + (R * p.dr_Theta) * (R * p.dr_Theta);
            h_row[it] = p.dtheta_R * p.dtheta_R + (R * p.dtheta_Theta) * (R * p.dtheta_Theta);
            out.f[ir * nt + it] = f_row[it];
            out.g[ir * nt + it] = g_row[it];
            out.h[ir * nt + it] = h_row[it];
        }
        out.f_radiality = std::max(out.f_radiality, radiality(f_row));
        out.g_radiality = std::max(out.g_radiality, radiality(g_row));
        out.h_radiality = std::max(out.h_radiality, radiality(h_row));
    }
    return out;
}

PhiDecomposition phi_decomposition(const PolarMap& map, const RadialProfile& profile,
                                   double r, double theta, const DiffScheme& scheme) {
    const double gv = profile.g(r);
    if (!(gv > 0.0))
        throw DegenerateInputError("phi decomposition: sqrt(g) vanishes at r = " +
                                   std::to_string(r));
    const double fv = profile.f(r);
    const double root_g = std::sqrt(gv);
    const double drift = std::sqrt(clamped_drift_sq(profile, r) / gv);

    const PolarPartials p = partials(map, r, theta, scheme);
    const double R = map.R(r, theta);
    const double phi = std::atan2(R * p.dr_Theta, p.dr_R);
    const double c = std::cos(phi), s = std::sin(phi);

    const double e1 = p.dr_R - root_g * c;
    const double e2 = R * p.dr_Theta - root_g * s;

    PhiDecomposition out;
    out.phi = phi;
    out.residual = std::numeric_limits<double>::infinity();
    for (int parity = 0; parity <= 1; ++parity) {
        const double sign = parity == 0 ? 1.0 : -1.0;
        const double e3 = p.dtheta_R - (sign * drift * c - fv / root_g * s);
        const double e4 = R * p.dtheta_Theta - (sign * drift * s + fv / root_g * c);
        const double defect =
            std::max({std::fabs(e1), std::fabs(e2), std::fabs(e3), std::fabs(e4)});
        if (defect < out.residual) {
            out.residual = defect;
            out.parity = parity;
        }
    }
    return out;
}

double HyperbolicResiduals::max_abs() const {
    return std::max(radial_eq.max_abs, angular_eq.max_abs);
}

HyperbolicResiduals hyperbolic_residuals(const PolarMap& map,
                                         const RadialProfile& profile, int parity,
                                         const PolarGrid& grid,
                                         const DiffScheme& scheme) {
    if (parity != 0 && parity != 1)
        throw ArgumentError("hyperbolic residuals: parity must be 0 or 1");

    // beta = f/g must keep one sign; reorient the determinant when negative.
    int orientation = 0;
    for (double r : grid.radii) {
        const double gv = profile.g(r);
        if (!(gv > 0.0))
            throw DegenerateInputError("hyperbolic residuals: g <= 0 at r = " +
                                       std::to_string(r));
        const double beta = profile.f(r) / gv;
        if (beta == 0.0) continue;
        const int s = beta > 0.0 ? +1 : -1;
        if (orientation == 0)
            orientation = s;
        else if (orientation != s)
            throw ArgumentError("hyperbolic residuals: beta = f/g changes sign on the grid");
    }
    if (orientation == 0)
        throw DegenerateInputError("hyperbolic residuals: beta = f/g vanishes on the grid");

    const double parity_sign = parity == 0 ? 1.0 : -1.0;
    ResidualAccumulator radial_acc, angular_acc;
    for (double r : grid.radii) {
        const double gv = profile.g(r);
        const double fv = static_cast<double>(orientation) * profile.f(r);
        const double alpha = parity_sign * std::sqrt(clamped_drift_sq(profile, r)) / gv;
        const double beta = fv / gv;
        for (double theta : grid.thetas) {
            const double R = map.R(r, theta);
            if (R == 0.0)
                throw DegenerateInputError("hyperbolic residuals: R = 0 at r = " +
                                           std::to_string(r));
            const PolarPartials p = partials(map, r, theta, scheme);
            radial_acc.add(p.dtheta_R - alpha * p.dr_R + beta * R * p.dr_Theta, r, theta);
            angular_acc.add(R * p.dtheta_Theta - alpha * R * p.dr_Theta - beta * p.dr_R,
                            r, theta);
        }
    }
    HyperbolicResiduals out;
    out.radial_eq = radial_acc.finish();
    out.angular_eq = angular_acc.finish();
    out.orientation = orientation;
    return out;
}

SpiralVerdict classify_spiral(const PolarMap& map, const PolarGrid& grid,
                              const DiffScheme& scheme, double tol) {
    const std::size_t nr = grid.radii.size();
    const std::size_t nt = grid.thetas.size();
    if (nr < 2 || nt < 4)
        throw ArgumentError("classify: grid must cover >= 2 radii and the full circle");

    SpiralVerdict verdict;
    verdict.r_profile.reserve(nr);
    verdict.theta_bar_profile.reserve(nr);

    // Pass 1: sample, check R periodicity, unwrap Theta rows, count the sign
    // of the angular derivative of Theta.
    std::vector<std::vector<double>> R_rows(nr), T_rows(nr);
    std::vector<int> winding(nr, 0);
    long positive = 0, negative = 0;
    for (std::size_t ir = 0; ir < nr; ++ir) {
        const double r = grid.radii[ir];
        auto& R_row = R_rows[ir];
        auto& T_row = T_rows[ir];
        R_row.resize(nt);
        T_row.resize(nt);
        for (std::size_t it = 0; it < nt; ++it) {
            R_row[it] = map.R(r, grid.thetas[it]);
            T_row[it] = map.Theta(r, grid.thetas[it]);
        }
        const double R_wrap = map.R(r, grid.thetas.front() + kTwoPi);
        if (std::fabs(R_wrap - R_row.front()) > 1e-6 * (1.0 + std::fabs(R_row.front())))
            throw ClassificationError("R is not 2*pi-periodic in theta at r = " +
                                      std::to_string(r));

        // Unwrap along theta; consecutive true differences must stay under pi.
        for (std::size_t it = 1; it < nt; ++it)
            T_row[it] = T_row[it - 1] + angle_diff(T_row[it], T_row[it - 1]);
        const double closure =
            T_row.back() + angle_diff(map.Theta(r, grid.thetas.front() + kTwoPi),
                                      T_row.back());
        winding[ir] = static_cast<int>(std::lround((closure - T_row.front()) / kTwoPi));

        for (std::size_t it = 0; it < nt; ++it) {
            double d;
            if (scheme.kind == DiffScheme::Kind::Analytic && map.has_analytic_partials()) {
                d = map.partials->dtheta_Theta(r, grid.thetas[it]);
            } else {
                // Row-slope differences: no radial margin needed, handles the
                // wrap-around through the unwrapped row.
                const double step = scheme.kind == DiffScheme::Kind::Central
                                        ? scheme.step
                                        : 1e-6;
                d = angle_diff(map.Theta(r, grid.thetas[it] + step),
                               map.Theta(r, grid.thetas[it] - step)) /
                    (2.0 * step);
            }
            if (d > 1e-12)
                ++positive;
            else if (d < -1e-12)
                ++negative;
        }
    }
    if (positive > 0 && negative > 0)
        throw ClassificationError(
            "sign of dtheta_Theta flips across the grid; map is not orientation-consistent");
    if (positive == 0 && negative == 0)
        throw ClassificationError("dtheta_Theta vanishes on the whole grid");
    verdict.eps1 = positive > 0 ? +1 : -1;
    verdict.winding = winding.front();
    for (std::size_t ir = 1; ir < nr; ++ir)
        if (winding[ir] != verdict.winding)
            throw ClassificationError("winding number varies across radii");

    // Pass 2: radiality of R and of the angular drift Theta - eps1 * theta.
    bool radial_ok = true;
    const double eps1 = static_cast<double>(verdict.eps1);
    for (std::size_t ir = 0; ir < nr; ++ir) {
        const double r = grid.radii[ir];
        const auto [rlo, rhi] = std::minmax_element(R_rows[ir].begin(), R_rows[ir].end());
        double R_mean = 0.0;
        for (double v : R_rows[ir]) R_mean += v;
        R_mean /= static_cast<double>(nt);
        const double R_spread = *rhi - *rlo;
        if (R_spread > tol * (1.0 + std::fabs(R_mean))) radial_ok = false;
        verdict.diagnostics.r_max_spread = std::max(verdict.diagnostics.r_max_spread, R_spread);
        verdict.diagnostics.r_radiality = std::max(
            verdict.diagnostics.r_radiality, R_spread / (std::fabs(R_mean) + 1e-12));

        double dev_mean = 0.0, dev_lo = 0.0, dev_hi = 0.0;
        for (std::size_t it = 0; it < nt; ++it) {
            const double dev = T_rows[ir][it] - eps1 * grid.thetas[it];
            dev_mean += dev;
            if (it == 0) {
                dev_lo = dev_hi = dev;
            } else {
                dev_lo = std::min(dev_lo, dev);
                dev_hi = std::max(dev_hi, dev);
            }
        }
        dev_mean /= static_cast<double>(nt);
        const double dev_spread = dev_hi - dev_lo;
        if (dev_spread > tol * (1.0 + std::fabs(dev_mean))) radial_ok = false;
        verdict.diagnostics.theta_max_spread =
            std::max(verdict.diagnostics.theta_max_spread, dev_spread);
        verdict.diagnostics.theta_radiality =
            std::max(verdict.diagnostics.theta_radiality,
                     dev_spread / (std::fabs(dev_mean) + 1e-12));

        verdict.r_profile.push_back({r, R_mean});
        verdict.theta_bar_profile.push_back({r, dev_mean});
    }
    verdict.is_spiral = radial_ok;

    // theta0: linear extrapolation of the drift to r = 0 from the two
    // smallest radii (maps are only C^2 away from 0).
    const double r1 = verdict.theta_bar_profile[0][0];
    const double r2 = verdict.theta_bar_profile[1][0];
    const double t1 = verdict.theta_bar_profile[0][1];
    const double t2 = verdict.theta_bar_profile[1][1];
    verdict.theta0 = t1 - r1 * (t2 - t1) / (r2 - r1);
    return verdict;
}

} // namespace isodeform
