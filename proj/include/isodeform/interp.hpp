#pragma once

#include <cstddef>
#include <vector>

namespace isodeform {

/// Monotone piecewise-cubic interpolant (Fritsch-Carlson slopes).
///
/// Preserves monotonicity of the data, which is what tabulated radial
/// profiles need: an increasing h column stays increasing between knots.
/// Evaluation outside [x.front(), x.back()] extrapolates linearly with the
/// boundary slope, so finite-difference probes just past the ends are safe.
class PchipInterpolant {
public:
    PchipInterpolant() = default;
    PchipInterpolant(std::vector<double> x, std::vector<double> y);

    double operator()(double t) const;
    double derivative(double t) const;

    bool empty() const { return x_.empty(); }
    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }

private:
    std::size_t segment(double t) const;

    std::vector<double> x_, y_, slope_;
};

/// Cubic Hermite table on a uniform abscissa grid with caller-supplied nodal
/// slopes. Used for cached antiderivatives where both values and exact
/// derivatives are known at the nodes; interpolation error is O(dx^4).
class CubicHermiteTable {
public:
    CubicHermiteTable() = default;
    CubicHermiteTable(double x0, double dx, std::vector<double> values,
                      std::vector<double> slopes);

    double operator()(double t) const;

    double x0() const { return x0_; }
    double x_back() const { return x0_ + dx_ * static_cast<double>(value_.size() - 1); }

private:
    double x0_ = 0.0, dx_ = 1.0;
    std::vector<double> value_, slope_;
};

} // namespace isodeform
