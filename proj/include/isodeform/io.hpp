#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "isodeform/excursion.hpp"
#include "isodeform/geometry_invariance.hpp"
#include "isodeform/isotropy.hpp"
#include "isodeform/map_analysis.hpp"
#include "isodeform/spiral.hpp"

namespace isodeform {

// --- profile file (text) ----------------------------------------------------
// Header line "profile v1", optional "r_max <value>", then either
//   closed-form <name> <params...>
// or
//   table
//   <r> <f> <g> <h>      (one row per sampled radius)
RadialProfile load_profile(const std::filesystem::path& path);
RadialProfile parse_profile(std::istream& in, const std::string& origin);

// --- spiral spec (JSON) -----------------------------------------------------
// {"eps1": +-1, "eps2": +-1, "theta0": <radians>, "profile": {...}}
// profile: {"kind": "closed-form", "name": ..., "params": [...], "r_max": ...}
//       or {"kind": "table", "rows": [[r, f, g, h], ...]}
SpiralSpec spiral_spec_from_json(const nlohmann::json& j);
SpiralSpec load_spiral_spec(const std::filesystem::path& path);

// --- sampled polar map (text) -----------------------------------------------
// Header "polarmap v1 nr <int> ntheta <int>", then rows "r theta R Theta" in
// row-major order (r outer), angles in radians, Theta unwrapped along each
// constant-r row.
void write_polarmap(const std::filesystem::path& path, const PolarMap& map,
                    const PolarGrid& grid);

struct LoadedPolarMap {
    PolarMap map;   // bilinear interpolation; exact at the stored nodes
    PolarGrid grid; // the native lattice
    int winding = 0;
};
LoadedPolarMap load_polarmap(const std::filesystem::path& path);

// --- masks (PGM, P5) ---------------------------------------------------------
void write_pgm(const std::filesystem::path& path, const BinaryGrid& grid);
BinaryGrid read_pgm(const std::filesystem::path& path);

// --- planar map registry ----------------------------------------------------
// Accepts "identity" | "scaling-2x" | "shear-0.3",
// {"rotation": <radians>}, {"linear": [a11, a12, a21, a22]},
// or {"spiral": <spiral spec object>}.
PlanarMap planar_map_from_json(const nlohmann::json& j);

// --- experiment configs -------------------------------------------------------
// {"center": [x, y], "halfwidths": [a, b], "orientation": <radians>}
Rect rect_from_json(const nlohmann::json& j);

// {"field": {"law": ..., "params": [...], "n_harmonics": ..., "seed": ...},
//  "map": ..., "rect": {...}, "levels": [...], "rotations": [...],
//  "replicates": ..., "resolution": ...}
struct IsotropyConfig {
    SpectralFieldSpec field;
    PlanarMap map;
    Rect rect;
    std::vector<double> levels, rotations;
    int replicates = 0;
    int resolution = 0;
};
IsotropyConfig isotropy_config_from_json(const nlohmann::json& j);

// --- report serialization ----------------------------------------------------
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const EquationResidual& r);
nlohmann::json to_json(const FghResiduals& r);
nlohmann::json to_json(const SpiralVerdict& v);
nlohmann::json to_json(const InvarianceReport& r);
nlohmann::json to_json(const IsotropyReport& r);

std::string isotropy_csv(const IsotropyReport& report);
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace isodeform
