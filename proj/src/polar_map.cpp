#include "isodeform/polar_map.hpp"

#include <cmath>

#include "isodeform/errors.hpp"

namespace isodeform {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

PolarGrid PolarGrid::geometric(double r_lo, double r_hi, std::size_t nr,
                               std::size_t ntheta) {
    if (!(r_lo > 0.0) || !(r_hi > r_lo))
        throw ArgumentError("polar grid: need 0 < r_lo < r_hi");
    if (nr < 2 || ntheta < 4)
        throw ArgumentError("polar grid: need nr >= 2 and ntheta >= 4");
    PolarGrid grid;
    grid.radii.resize(nr);
    const double ratio = std::pow(r_hi / r_lo, 1.0 / static_cast<double>(nr - 1));
    double r = r_lo;
    for (std::size_t i = 0; i < nr; ++i) {
        grid.radii[i] = r;
        r *= ratio;
    }
    grid.radii.back() = r_hi; // kill accumulated rounding at the top end
    grid.thetas.resize(ntheta);
    for (std::size_t j = 0; j < ntheta; ++j)
        grid.thetas[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(ntheta);
    return grid;
}

PolarGrid PolarGrid::standard(double r_max, std::size_t nr, std::size_t ntheta) {
    return geometric(0.05 * r_max, r_max, nr, ntheta);
}

PolarMap linear_polar_map(double a11, double a12, double a21, double a22) {
    const double det = a11 * a22 - a12 * a21;
    if (det == 0.0)
        throw ArgumentError("linear polar map: matrix must be invertible");

    // Image of the unit direction u(theta) under A, and its theta-derivative.
    auto image = [=](double theta, double* vx, double* vy, double* dvx,
                     double* dvy) {
        const double c = std::cos(theta), s = std::sin(theta);
        *vx = a11 * c + a12 * s;
        *vy = a21 * c + a22 * s;
        *dvx = -a11 * s + a12 * c;
        *dvy = -a21 * s + a22 * c;
    };

    PolarMap map;
    map.R = [=](double r, double theta) {
        double vx, vy, dvx, dvy;
        image(theta, &vx, &vy, &dvx, &dvy);
        return r * std::hypot(vx, vy);
    };
    map.Theta = [=](double r, double theta) {
        (void)r;
        double vx, vy, dvx, dvy;
        image(theta, &vx, &vy, &dvx, &dvy);
        return std::atan2(vy, vx);
    };
    PolarMap::AnalyticPartials p;
    p.dr_R = [=](double, double theta) {
        double vx, vy, dvx, dvy;
        image(theta, &vx, &vy, &dvx, &dvy);
        return std::hypot(vx, vy);
    };
    p.dtheta_R = [=](double r, double theta) {
        double vx, vy, dvx, dvy;
        image(theta, &vx, &vy, &dvx, &dvy);
        return r * (vx * dvx + vy * dvy) / std::hypot(vx, vy);
    };
    p.dr_Theta = [](double, double) { return 0.0; };
    p.dtheta_Theta = [=](double, double theta) {
        double vx, vy, dvx, dvy;
        image(theta, &vx, &vy, &dvx, &dvy);
        // d/dtheta atan2(vy, vx) = (vx dvy - vy dvx) / |v|^2 = det(A) / |v|^2
        return (vx * dvy - vy * dvx) / (vx * vx + vy * vy);
    };
    map.partials = std::move(p);
    return map;
}

} // namespace isodeform
