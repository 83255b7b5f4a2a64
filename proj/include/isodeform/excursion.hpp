#pragma once

#include <cstdint>
#include <vector>

#include "isodeform/field.hpp"
#include "isodeform/planar_map.hpp"

namespace isodeform {

/// Rasterized excursion set over a (possibly rotated) rectangle: mask[iy*m+ix]
/// is true where the sampled value at the pixel center clears the level.
struct BinaryGrid {
    int m = 0;
    std::vector<std::uint8_t> mask; // row-major, m*m entries
    Rect anchor;                    // the rectangle actually rasterized
    double pixel_w = 0.0, pixel_h = 0.0;

    bool at(int ix, int iy) const {
        return mask[static_cast<std::size_t>(iy) * static_cast<std::size_t>(m) +
                    static_cast<std::size_t>(ix)] != 0;
    }
    void set(int ix, int iy, bool v) {
        mask[static_cast<std::size_t>(iy) * static_cast<std::size_t>(m) +
             static_cast<std::size_t>(ix)] = v ? 1 : 0;
    }
};

/// Pixel centers of the m x m raster of rotate(rect, rotation), row-major.
std::vector<Vec2> raster_points(const Rect& rect, double rotation, int m);

/// Excursion set of the deformed field: evaluates X(F(t)) at the pixel
/// centers of the rectangle rotated about the origin by `rotation`, then
/// thresholds at u.
BinaryGrid deformed_excursion(const FieldSample& sample, const PlanarMap& F,
                              const Rect& rect, double rotation, double u, int m);

/// Euler characteristic V - E + F of the cubical complex in which every true
/// pixel contributes its closed unit square (vertices and edges de-duplicated
/// across neighbors). Under this closed-square convention two diagonally
/// touching pixels are connected through their shared vertex.
long euler_characteristic(const BinaryGrid& grid);

} // namespace isodeform
