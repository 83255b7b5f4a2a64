#include "isodeform/interp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "isodeform/errors.hpp"

namespace isodeform {

PchipInterpolant::PchipInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 2 || y_.size() != n)
        throw ArgumentError("pchip: need at least two knots and matching value count");
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!(x_[i] < x_[i + 1]))
            throw ArgumentError("pchip: abscissae must be strictly increasing");

    slope_.assign(n, 0.0);
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x_[i + 1] - x_[i];
        delta[i] = (y_[i + 1] - y_[i]) / h[i];
    }

    if (n == 2) {
        slope_[0] = slope_[1] = delta[0];
        return;
    }

    // Interior slopes: weighted harmonic mean when the adjacent secants agree
    // in sign, zero otherwise (local extremum).
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] > 0.0) {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            slope_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }

    // One-sided three-point endpoint formula, clamped to keep monotonicity.
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (m * d0 <= 0.0)
            m = 0.0;
        else if (d0 * d1 < 0.0 && std::fabs(m) > 3.0 * std::fabs(d0))
            m = 3.0 * d0;
        return m;
    };
    slope_[0] = endpoint(h[0], h[1], delta[0], delta[1]);
    slope_[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

std::size_t PchipInterpolant::segment(double t) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - x_.begin());
    if (i == 0) return 0;
    if (i >= x_.size()) return x_.size() - 2;
    return i - 1;
}

double PchipInterpolant::operator()(double t) const {
    if (t <= x_.front())
        return y_.front() + slope_.front() * (t - x_.front());
    if (t >= x_.back())
        return y_.back() + slope_.back() * (t - x_.back());
    const std::size_t i = segment(t);
    const double h = x_[i + 1] - x_[i];
    const double s = (t - x_[i]) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
}

double PchipInterpolant::derivative(double t) const {
    if (t <= x_.front()) return slope_.front();
    if (t >= x_.back()) return slope_.back();
    const std::size_t i = segment(t);
    const double h = x_[i + 1] - x_[i];
    const double s = (t - x_[i]) / h;
    const double s2 = s * s;
    const double d00 = (6 * s2 - 6 * s) / h;
    const double d10 = 3 * s2 - 4 * s + 1;
    const double d01 = (-6 * s2 + 6 * s) / h;
    const double d11 = 3 * s2 - 2 * s;
    return d00 * y_[i] + d10 * slope_[i] + d01 * y_[i + 1] + d11 * slope_[i + 1];
}

CubicHermiteTable::CubicHermiteTable(double x0, double dx, std::vector<double> values,
                                     std::vector<double> slopes)
    : x0_(x0), dx_(dx), value_(std::move(values)), slope_(std::move(slopes)) {
    if (value_.size() < 2 || slope_.size() != value_.size())
        throw ArgumentError("hermite table: need >= 2 nodes and matching slope count");
    if (!(dx_ > 0.0))
        throw ArgumentError("hermite table: node spacing must be positive");
}

double CubicHermiteTable::operator()(double t) const {
    const std::size_t n = value_.size();
    const double last = x0_ + dx_ * static_cast<double>(n - 1);
    if (t <= x0_) return value_.front() + slope_.front() * (t - x0_);
    if (t >= last) return value_.back() + slope_.back() * (t - last);
    double u = (t - x0_) / dx_;
    std::size_t i = static_cast<std::size_t>(u);
    if (i >= n - 1) i = n - 2;
    const double s = u - static_cast<double>(i);
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * value_[i] + h10 * dx_ * slope_[i] + h01 * value_[i + 1] +
           h11 * dx_ * slope_[i + 1];
}

} // namespace isodeform
