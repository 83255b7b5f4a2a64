#include "isodeform/excursion.hpp"

#include "isodeform/errors.hpp"

namespace isodeform {

std::vector<Vec2> raster_points(const Rect& rect, double rotation, int m) {
    if (m < 2) throw ArgumentError("raster: need resolution m >= 2");
    const Rect placed = rotate(rect, rotation);
    std::vector<Vec2> pts;
    pts.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    const double d = 2.0 / static_cast<double>(m);
    for (int iy = 0; iy < m; ++iy) {
        const double t = -1.0 + (static_cast<double>(iy) + 0.5) * d;
        for (int ix = 0; ix < m; ++ix) {
            const double s = -1.0 + (static_cast<double>(ix) + 0.5) * d;
            pts.push_back(placed.local_point(s, t));
        }
    }
    return pts;
}

BinaryGrid deformed_excursion(const FieldSample& sample, const PlanarMap& F,
                              const Rect& rect, double rotation, double u, int m) {
    BinaryGrid grid;
    grid.m = m;
    grid.anchor = rotate(rect, rotation);
    grid.pixel_w = 2.0 * rect.half_width / static_cast<double>(m);
    grid.pixel_h = 2.0 * rect.half_height / static_cast<double>(m);
    grid.mask.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));

    const std::vector<Vec2> pts = raster_points(rect, rotation, m);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2 q = F(pts[i]);
        grid.mask[i] = sample(q.x, q.y) >= u ? 1 : 0;
    }
    return grid;
}

long euler_characteristic(const BinaryGrid& grid) {
    const int m = grid.m;
    long faces = 0;
    for (std::uint8_t v : grid.mask) faces += v ? 1 : 0;

    // A vertex of the (m+1) x (m+1) corner lattice is present when any of its
    // up to four incident pixels is true; likewise an edge is present when
    // either of its up to two incident pixels is true.
    auto pixel = [&](int ix, int iy) {
        return ix >= 0 && iy >= 0 && ix < m && iy < m && grid.at(ix, iy);
    };

    long vertices = 0;
    for (int iy = 0; iy <= m; ++iy)
        for (int ix = 0; ix <= m; ++ix)
            if (pixel(ix - 1, iy - 1) || pixel(ix, iy - 1) || pixel(ix - 1, iy) ||
                pixel(ix, iy))
                ++vertices;

    long edges = 0;
    // Horizontal edges: between corners (ix, iy) and (ix+1, iy).
    for (int iy = 0; iy <= m; ++iy)
        for (int ix = 0; ix < m; ++ix)
            if (pixel(ix, iy - 1) || pixel(ix, iy)) ++edges;
    // Vertical edges: between corners (ix, iy) and (ix, iy+1).
    for (int iy = 0; iy < m; ++iy)
        for (int ix = 0; ix <= m; ++ix)
            if (pixel(ix - 1, iy) || pixel(ix, iy)) ++edges;

    return vertices - edges + faces;
}

} // namespace isodeform
