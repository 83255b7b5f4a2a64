#include "isodeform/isotropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isodeform/errors.hpp"
#include "isodeform/geometry_invariance.hpp"
#include "isodeform/parallel.hpp"

namespace isodeform {

namespace {

// chi of every replicate at every level, for one (rect, rotation) cell.
// The F-images of the raster points are shared across replicates; only the
// field changes per replicate. Output is indexed [level][replicate].
std::vector<std::vector<long>> replicate_chis(const SpectralFieldSpec& spec,
                                              const PlanarMap& F, const Rect& rect,
                                              double rotation,
                                              std::span<const double> u_levels,
                                              int replicates, int m, int workers) {
    if (replicates < 2)
        throw ArgumentError("replicate run: need at least 2 replicates");

    const std::vector<Vec2> pts = raster_points(rect, rotation, m);
    std::vector<Vec2> images(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) images[i] = F(pts[i]);

    std::vector<std::vector<long>> chis(u_levels.size());
    for (auto& row : chis) row.resize(static_cast<std::size_t>(replicates));

    if (workers < 1) workers = 1;
    struct Scratch {
        std::vector<double> values;
        BinaryGrid grid;
    };
    std::vector<Scratch> scratch(static_cast<std::size_t>(workers));
    for (auto& s : scratch) {
        s.values.resize(images.size());
        s.grid.m = m;
        s.grid.mask.resize(images.size());
        s.grid.anchor = rotate(rect, rotation);
        s.grid.pixel_w = 2.0 * rect.half_width / m;
        s.grid.pixel_h = 2.0 * rect.half_height / m;
    }

    parallel_for_index(
        static_cast<std::size_t>(replicates), workers,
        [&](std::size_t rep, int worker) {
            Scratch& s = scratch[static_cast<std::size_t>(worker)];
            const FieldSample sample = sample_field(spec, rep);
            for (std::size_t i = 0; i < images.size(); ++i)
                s.values[i] = sample(images[i].x, images[i].y);
            for (std::size_t lu = 0; lu < u_levels.size(); ++lu) {
                const double u = u_levels[lu];
                for (std::size_t i = 0; i < images.size(); ++i)
                    s.grid.mask[i] = s.values[i] >= u ? 1 : 0;
                chis[lu][rep] = euler_characteristic(s.grid);
            }
        });
    return chis;
}

EulerEstimate summarize(const std::vector<long>& chi, double u, double rotation) {
    const std::size_t n = chi.size();
    double mean = 0.0;
    for (long v : chi) mean += static_cast<double>(v);
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (long v : chi) {
        const double d = static_cast<double>(v) - mean;
        ss += d * d;
    }
    EulerEstimate est;
    est.mean = mean;
    est.std_err = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1) /
                                    static_cast<double>(n))
                        : 0.0;
    est.replicates = static_cast<int>(n);
    est.u = u;
    est.rotation = rotation;
    return est;
}

} // namespace

EulerEstimate mean_euler(const SpectralFieldSpec& spec, const PlanarMap& F,
                         const Rect& rect, double rotation, double u,
                         int replicates, int m, int workers) {
    const double levels[1] = {u};
    const auto chis = replicate_chis(spec, F, rect, rotation,
                                     std::span<const double>(levels, 1), replicates,
                                     m, workers);
    return summarize(chis[0], u, rotation);
}

IsotropyReport weak_isotropy_test(const SpectralFieldSpec& spec, const PlanarMap& F,
                                  const Rect& rect, std::span<const double> u_levels,
                                  std::span<const double> rotations, int replicates,
                                  int m, int workers) {
    if (rotations.size() < 2)
        throw ArgumentError("weak isotropy test: need >= 2 rotations including 0");
    std::size_t base_idx = rotations.size();
    for (std::size_t i = 0; i < rotations.size(); ++i)
        if (rotations[i] == 0.0) {
            base_idx = i;
            break;
        }
    if (base_idx == rotations.size())
        throw ArgumentError("weak isotropy test: rotations must include 0");
    if (u_levels.empty())
        throw ArgumentError("weak isotropy test: need at least one level");

    // estimates[rotation][level]
    std::vector<std::vector<EulerEstimate>> est(rotations.size());
    for (std::size_t ir = 0; ir < rotations.size(); ++ir) {
        const auto chis =
            replicate_chis(spec, F, rect, rotations[ir], u_levels, replicates, m, workers);
        est[ir].reserve(u_levels.size());
        for (std::size_t lu = 0; lu < u_levels.size(); ++lu)
            est[ir].push_back(summarize(chis[lu], u_levels[lu], rotations[ir]));
    }

    IsotropyReport report;
    for (std::size_t lu = 0; lu < u_levels.size(); ++lu) {
        const EulerEstimate& base = est[base_idx][lu];
        for (std::size_t ir = 0; ir < rotations.size(); ++ir) {
            const EulerEstimate& e = est[ir][lu];
            IsotropyCell cell;
            cell.u = e.u;
            cell.rotation = e.rotation;
            cell.mean_chi = e.mean;
            cell.std_err = e.std_err;
            const double denom = std::hypot(e.std_err, base.std_err);
            const double diff = e.mean - base.mean;
            if (denom > 0.0)
                cell.z = diff / denom;
            else
                cell.z = diff == 0.0 ? 0.0
                                     : std::copysign(
                                           std::numeric_limits<double>::infinity(), diff);
            cell.pass = std::fabs(cell.z) <= 3.0;
            report.pass = report.pass && cell.pass;
            report.cells.push_back(cell);
        }
    }
    return report;
}

AreaLengthFit area_length_fit(const SpectralFieldSpec& spec, const PlanarMap& F,
                              std::span<const Rect> rects, double u, int replicates,
                              int m, int workers, int quad_n) {
    if (rects.size() < 4)
        throw ArgumentError("area-length fit: need at least 4 rectangles");

    AreaLengthFit fit;
    for (const Rect& rect : rects) {
        fit.areas.push_back(pushforward_area(F, rect, quad_n));
        const auto c = rect.corners();
        double perim = 0.0;
        for (int k = 0; k < 4; ++k)
            perim += pushforward_length(F, Segment(c[k], c[(k + 1) % 4]), quad_n);
        fit.perimeters.push_back(perim);
        fit.means.push_back(
            mean_euler(spec, F, rect, 0.0, u, replicates, m, workers).mean);
    }

    // Normal equations for the 3-parameter least squares.
    const std::size_t n = rects.size();
    double ata[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double aty[3] = {0, 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const double row[3] = {fit.areas[i], fit.perimeters[i], 1.0};
        for (int a = 0; a < 3; ++a) {
            aty[a] += row[a] * fit.means[i];
            for (int b = 0; b < 3; ++b) ata[a][b] += row[a] * row[b];
        }
    }

    // Gaussian elimination with partial pivoting on the 3x3 system.
    double aug[3][4];
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) aug[a][b] = ata[a][b];
        aug[a][3] = aty[a];
    }
    double scale = 0.0;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) scale = std::max(scale, std::fabs(aug[a][b]));
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int rr = col + 1; rr < 3; ++rr)
            if (std::fabs(aug[rr][col]) > std::fabs(aug[pivot][col])) pivot = rr;
        if (std::fabs(aug[pivot][col]) <= 1e-12 * scale)
            throw ConfigError(
                "area-length fit: rank-deficient design (rectangles too similar)");
        if (pivot != col)
            for (int b = 0; b < 4; ++b) std::swap(aug[pivot][b], aug[col][b]);
        for (int rr = 0; rr < 3; ++rr) {
            if (rr == col) continue;
            const double factor = aug[rr][col] / aug[col][col];
            for (int b = col; b < 4; ++b) aug[rr][b] -= factor * aug[col][b];
        }
    }
    fit.area_coeff = aug[0][3] / aug[0][0];
    fit.perimeter_coeff = aug[1][3] / aug[1][1];
    fit.intercept = aug[2][3] / aug[2][2];

    double y_mean = 0.0;
    for (double y : fit.means) y_mean += y;
    y_mean /= static_cast<double>(n);
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = fit.area_coeff * fit.areas[i] +
                            fit.perimeter_coeff * fit.perimeters[i] + fit.intercept;
        ss_res += (fit.means[i] - pred) * (fit.means[i] - pred);
        ss_tot += (fit.means[i] - y_mean) * (fit.means[i] - y_mean);
    }
    if (ss_tot > 1e-12)
        fit.r_squared = 1.0 - ss_res / ss_tot;
    else
        fit.r_squared = ss_res <= 1e-9 ? 1.0 : 0.0;
    return fit;
}

} // namespace isodeform
