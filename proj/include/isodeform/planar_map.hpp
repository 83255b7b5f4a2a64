#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>

#include "isodeform/polar_map.hpp"

namespace isodeform {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 rotate(const Vec2& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

/// Axis-aligned-by-default rectangle: center, half-widths, and an orientation
/// angle of its own frame. Rotating the rectangle about the origin moves the
/// center and adds to the orientation.
struct Rect {
    Vec2 center;
    double half_width = 0.0;  // along the rectangle's own x axis
    double half_height = 0.0; // along its own y axis
    double orientation = 0.0;

    Rect() = default;
    Rect(Vec2 c, double hw, double hh, double orient = 0.0);

    double area() const { return 4.0 * half_width * half_height; }
    double perimeter() const { return 4.0 * (half_width + half_height); }
    /// Point at local coordinates (s, t) in [-1, 1]^2.
    Vec2 local_point(double s, double t) const;
    std::array<Vec2, 4> corners() const;
};

Rect rotate(const Rect& rect, double angle);

struct Segment {
    Vec2 a, b;

    Segment() = default;
    Segment(Vec2 a_, Vec2 b_);

    double length() const { return std::hypot(b.x - a.x, b.y - a.y); }
    Vec2 point(double t) const { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }
};

Segment rotate(const Segment& seg, double angle);

/// Cartesian planar transformation. `id` names the transform in reports.
struct PlanarMap {
    std::function<Vec2(Vec2)> forward;
    std::string id;

    Vec2 operator()(Vec2 p) const { return forward(p); }
};

PlanarMap identity_map();
PlanarMap linear_map(double a11, double a12, double a21, double a22,
                     std::string id);
/// (x, y) -> (2x, y)
PlanarMap scaling_2x_map();
/// (x, y) -> (x + 0.3 y, y)
PlanarMap shear_map();
PlanarMap rotation_map(double angle);

/// Assembles F(x, y) = (R cos Theta, R sin Theta) at (r, theta) = polar(x, y).
/// At the origin F(0) = 0 whenever R(0, .) = 0, which is the case for every
/// admissible spiral.
PlanarMap from_polar(const PolarMap& map, std::string id);

} // namespace isodeform
