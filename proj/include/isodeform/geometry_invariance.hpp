#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "isodeform/planar_map.hpp"

namespace isodeform {

/// Area of F(E) as the Jacobian integral over E:
///   integral_E |det Jac_F| dx dy
/// by the midpoint rule on an n x n subdivision of the rectangle in its own
/// frame, cartesian Jacobian by central differences with step
/// min(half-widths)/(100 n). Second-order convergent in 1/n. Exact change of
/// variables, valid because F is a diffeomorphism (no folding).
double pushforward_area(const PlanarMap& F, const Rect& rect, int n);

/// Length of F(s) = integral_0^1 |Jac_F(s(t)) s'(t)| dt, composite midpoint
/// with n panels and a directional central difference along the segment.
double pushforward_length(const PlanarMap& F, const Segment& seg, int n);

using Shape = std::variant<Rect, Segment>;

struct InvarianceReport {
    std::string shape;        // "rect" | "segment"
    std::string transform_id;
    std::vector<double> rotations; // includes the leading identity rotation 0
    std::vector<double> values;    // measure of F(rotate(E, phi)) per rotation
    double rel_spread = 0.0;       // (max - min) / |mean|
    bool pass = false;
};

/// Measures F(rotate(E, phi)) for phi = 0 and each requested rotation; the
/// rotation is about the origin. pass <=> relative spread <= tol_rel.
InvarianceReport rotation_invariance_report(const PlanarMap& F, const Shape& shape,
                                            std::span<const double> rotations,
                                            int n, double tol_rel);

/// Deterministic pseudo-random rotation angles in [0, 2*pi) for invariance
/// sweeps; a fixed-seed draw avoids accidental alignment with shape symmetry.
std::vector<double> seeded_rotations(std::size_t count, std::uint64_t seed);

} // namespace isodeform
