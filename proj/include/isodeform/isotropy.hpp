#pragma once

#include <span>
#include <vector>

#include "isodeform/excursion.hpp"
#include "isodeform/field.hpp"
#include "isodeform/planar_map.hpp"

namespace isodeform {

struct EulerEstimate {
    double mean = 0.0;
    double std_err = 0.0;
    int replicates = 0;
    double u = 0.0;
    double rotation = 0.0;
};

/// Monte Carlo mean and standard error of the Euler characteristic of the
/// excursion set of X o F over rotate(rect, rotation) at level u. Replicates
/// use distinct counter-based streams; results are reduced in replicate-index
/// order, so the outcome is bit-identical for any worker count.
EulerEstimate mean_euler(const SpectralFieldSpec& spec, const PlanarMap& F,
                         const Rect& rect, double rotation, double u,
                         int replicates, int m, int workers = 1);

struct IsotropyCell {
    double u = 0.0;
    double rotation = 0.0;
    double mean_chi = 0.0;
    double std_err = 0.0;
    double z = 0.0; // against the rotation = 0 cell at the same level
    bool pass = true;
};

struct IsotropyReport {
    std::vector<IsotropyCell> cells; // levels outer, rotations inner
    bool pass = true;
};

/// The rotation-invariance experiment: for each level u and rotation phi,
/// estimates E[chi] with a shared base seed (the same field replicates are
/// reused across cells) and scores the deviation from the phi = 0 cell as
///   z = (mean_phi - mean_0) / sqrt(se_phi^2 + se_0^2).
/// pass <=> |z| <= 3 in every cell. `rotations` must contain 0.
IsotropyReport weak_isotropy_test(const SpectralFieldSpec& spec, const PlanarMap& F,
                                  const Rect& rect, std::span<const double> u_levels,
                                  std::span<const double> rotations, int replicates,
                                  int m, int workers = 1);

struct AreaLengthFit {
    double area_coeff = 0.0;      // a(u)
    double perimeter_coeff = 0.0; // b(u)
    double intercept = 0.0;       // c(u)
    double r_squared = 0.0;
    std::vector<double> areas, perimeters, means; // per rectangle
};

/// Least-squares fit  E[chi] ~ a * area(F(T)) + b * len(boundary F(T)) + c
/// over a family of rectangles. Areas come from the Jacobian integral, the
/// boundary length is the sum of the four pushforward edge lengths.
/// Needs >= 4 rectangles with a full-rank (area, perimeter, 1) design.
AreaLengthFit area_length_fit(const SpectralFieldSpec& spec, const PlanarMap& F,
                              std::span<const Rect> rects, double u, int replicates,
                              int m, int workers = 1, int quad_n = 128);

} // namespace isodeform
