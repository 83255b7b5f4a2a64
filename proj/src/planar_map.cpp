#include "isodeform/planar_map.hpp"

#include <cmath>
#include <utility>

#include "isodeform/errors.hpp"

namespace isodeform {

Rect::Rect(Vec2 c, double hw, double hh, double orient)
    : center(c), half_width(hw), half_height(hh), orientation(orient) {
    if (!(hw > 0.0) || !(hh > 0.0))
        throw ArgumentError("rect: half-widths must be positive");
}

Vec2 Rect::local_point(double s, double t) const {
    const Vec2 local{s * half_width, t * half_height};
    const Vec2 world = rotate(local, orientation);
    return {center.x + world.x, center.y + world.y};
}

std::array<Vec2, 4> Rect::corners() const {
    return {local_point(-1, -1), local_point(1, -1), local_point(1, 1),
            local_point(-1, 1)};
}

Rect rotate(const Rect& rect, double angle) {
    Rect out = rect;
    out.center = rotate(rect.center, angle);
    out.orientation = rect.orientation + angle;
    return out;
}

Segment::Segment(Vec2 a_, Vec2 b_) : a(a_), b(b_) {
    if (a.x == b.x && a.y == b.y)
        throw ArgumentError("segment: endpoints must be distinct");
}

Segment rotate(const Segment& seg, double angle) {
    return Segment(rotate(seg.a, angle), rotate(seg.b, angle));
}

PlanarMap identity_map() {
    return {[](Vec2 p) { return p; }, "identity"};
}

PlanarMap linear_map(double a11, double a12, double a21, double a22,
                     std::string id) {
    return {[=](Vec2 p) {
                return Vec2{a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y};
            },
            std::move(id)};
}

PlanarMap scaling_2x_map() { return linear_map(2, 0, 0, 1, "scaling-2x"); }

PlanarMap shear_map() { return linear_map(1, 0.3, 0, 1, "shear-0.3"); }

PlanarMap rotation_map(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return linear_map(c, -s, s, c, "rotation");
}

PlanarMap from_polar(const PolarMap& map, std::string id) {
    return {[map](Vec2 p) {
                const double r = std::hypot(p.x, p.y);
                if (r == 0.0) {
                    const double R0 = map.R(0.0, 0.0);
                    if (std::fabs(R0) < 1e-300) return Vec2{0.0, 0.0};
                    const double T0 = map.Theta(0.0, 0.0);
                    return Vec2{R0 * std::cos(T0), R0 * std::sin(T0)};
                }
                const double theta = std::atan2(p.y, p.x);
                const double R = map.R(r, theta);
                const double T = map.Theta(r, theta);
                return Vec2{R * std::cos(T), R * std::sin(T)};
            },
            std::move(id)};
}

} // namespace isodeform
