#include "isodeform/geometry_invariance.hpp"

#include <algorithm>
#include <cmath>

#include "isodeform/errors.hpp"
#include "isodeform/rng.hpp"

namespace isodeform {

namespace {

// det of the cartesian Jacobian of F at p by central differences.
double jacobian_det(const PlanarMap& F, Vec2 p, double step) {
    const Vec2 xp = F({p.x + step, p.y});
    const Vec2 xm = F({p.x - step, p.y});
    const Vec2 yp = F({p.x, p.y + step});
    const Vec2 ym = F({p.x, p.y - step});
    const double fxx = (xp.x - xm.x) / (2.0 * step);
    const double fyx = (xp.y - xm.y) / (2.0 * step);
    const double fxy = (yp.x - ym.x) / (2.0 * step);
    const double fyy = (yp.y - ym.y) / (2.0 * step);
    const double det = fxx * fyy - fxy * fyx;
    if (!std::isfinite(det))
        throw EvaluationError("jacobian is non-finite at (" + std::to_string(p.x) +
                                  ", " + std::to_string(p.y) + ")",
                              std::hypot(p.x, p.y));
    return det;
}

} // namespace

double pushforward_area(const PlanarMap& F, const Rect& rect, int n) {
    if (n < 2) throw ArgumentError("pushforward_area: need n >= 2 subdivisions");
    const double step =
        std::min(rect.half_width, rect.half_height) / (100.0 * static_cast<double>(n));
    const double ds = 2.0 / static_cast<double>(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double s = -1.0 + (static_cast<double>(i) + 0.5) * ds;
        for (int j = 0; j < n; ++j) {
            const double t = -1.0 + (static_cast<double>(j) + 0.5) * ds;
            total += std::fabs(jacobian_det(F, rect.local_point(s, t), step));
        }
    }
    const double cell = rect.area() / static_cast<double>(n) / static_cast<double>(n);
    return total * cell;
}

double pushforward_length(const PlanarMap& F, const Segment& seg, int n) {
    if (n < 2) throw ArgumentError("pushforward_length: need n >= 2 panels");
    const double len = seg.length();
    const double step = len / (100.0 * static_cast<double>(n));
    const Vec2 dir{(seg.b.x - seg.a.x) / len, (seg.b.y - seg.a.y) / len};
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const Vec2 p = seg.point(t);
        const Vec2 fp = F({p.x + step * dir.x, p.y + step * dir.y});
        const Vec2 fm = F({p.x - step * dir.x, p.y - step * dir.y});
        const double dx = (fp.x - fm.x) / (2.0 * step);
        const double dy = (fp.y - fm.y) / (2.0 * step);
        const double speed = std::hypot(dx, dy); // |Jac_F . dir|
        if (!std::isfinite(speed))
            throw EvaluationError("jacobian is non-finite along the segment",
                                  std::hypot(p.x, p.y));
        total += speed;
    }
    return total * len / static_cast<double>(n);
}

InvarianceReport rotation_invariance_report(const PlanarMap& F, const Shape& shape,
                                            std::span<const double> rotations,
                                            int n, double tol_rel) {
    if (rotations.empty())
        throw ArgumentError("rotation invariance: need at least one rotation");

    InvarianceReport report;
    report.transform_id = F.id;
    report.rotations.push_back(0.0);
    report.rotations.insert(report.rotations.end(), rotations.begin(), rotations.end());

    if (std::holds_alternative<Rect>(shape)) {
        report.shape = "rect";
        const Rect& rect = std::get<Rect>(shape);
        for (double phi : report.rotations)
            report.values.push_back(pushforward_area(F, rotate(rect, phi), n));
    } else {
        report.shape = "segment";
        const Segment& seg = std::get<Segment>(shape);
        for (double phi : report.rotations)
            report.values.push_back(pushforward_length(F, rotate(seg, phi), n));
    }

    const auto [lo, hi] = std::minmax_element(report.values.begin(), report.values.end());
    double mean = 0.0;
    for (double v : report.values) mean += v;
    mean /= static_cast<double>(report.values.size());
    report.rel_spread = (*hi - *lo) / std::max(std::fabs(mean), 1e-300);
    report.pass = report.rel_spread <= tol_rel;
    return report;
}

std::vector<double> seeded_rotations(std::size_t count, std::uint64_t seed) {
    SplitMix64 rng(mix64(seed));
    std::vector<double> out(count);
    for (auto& v : out) v = rng.next_angle();
    return out;
}

} // namespace isodeform
