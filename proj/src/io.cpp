#include "isodeform/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

namespace isodeform {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return in;
}

double json_number(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ConfigError(std::string("missing or non-numeric field: ") + key);
    return j.at(key).get<double>();
}

} // namespace

RadialProfile parse_profile(std::istream& in, const std::string& origin) {
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            const auto pos = out.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (out[pos] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_line(line))
        throw IoError(origin + ": empty profile file");
    {
        std::istringstream header(line);
        std::string word, version;
        header >> word >> version;
        if (word != "profile" || version != "v1")
            throw IoError(origin + ": expected header 'profile v1'");
    }

    double r_max = 2.0;
    if (!next_line(line))
        throw IoError(origin + ": profile body missing");
    {
        std::istringstream body(line);
        std::string word;
        body >> word;
        if (word == "r_max") {
            if (!(body >> r_max) || !(r_max > 0.0))
                throw IoError(origin + ": bad r_max line");
            if (!next_line(line))
                throw IoError(origin + ": profile body missing");
        }
    }

    std::istringstream body(line);
    std::string kind;
    body >> kind;
    if (kind == "closed-form") {
        std::string name;
        body >> name;
        if (name.empty())
            throw IoError(origin + ": closed-form line needs a profile name");
        std::vector<double> params;
        double v;
        while (body >> v) params.push_back(v);
        return named_profile(name, params, r_max);
    }
    if (kind == "table") {
        std::vector<std::array<double, 4>> rows;
        while (next_line(line)) {
            std::istringstream row(line);
            std::array<double, 4> values{};
            if (!(row >> values[0] >> values[1] >> values[2] >> values[3]))
                throw IoError(origin + ": bad table row: " + line);
            rows.push_back(values);
        }
        return table_profile(rows);
    }
    throw IoError(origin + ": expected 'closed-form' or 'table', got '" + kind + "'");
}

RadialProfile load_profile(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    return parse_profile(in, path.string());
}

namespace {

RadialProfile profile_from_json(const nlohmann::json& j) {
    const std::string kind = j.value("kind", "closed-form");
    if (kind == "closed-form") {
        const std::string name = j.value("name", "");
        if (name.empty()) throw ConfigError("profile: closed-form needs a name");
        std::vector<double> params;
        if (j.contains("params")) params = j.at("params").get<std::vector<double>>();
        const double r_max = j.value("r_max", 2.0);
        return named_profile(name, params, r_max);
    }
    if (kind == "table") {
        if (!j.contains("rows")) throw ConfigError("profile: table needs rows");
        std::vector<std::array<double, 4>> rows;
        for (const auto& row : j.at("rows")) {
            if (!row.is_array() || row.size() != 4)
                throw ConfigError("profile: each table row is [r, f, g, h]");
            rows.push_back({row[0].get<double>(), row[1].get<double>(),
                            row[2].get<double>(), row[3].get<double>()});
        }
        return table_profile(rows, j.value("h0", 0.0));
    }
    throw ConfigError("profile: unknown kind '" + kind + "'");
}

} // namespace

SpiralSpec spiral_spec_from_json(const nlohmann::json& j) {
    SpiralSpec spec;
    const double e1 = json_number(j, "eps1");
    const double e2 = json_number(j, "eps2");
    if ((e1 != 1.0 && e1 != -1.0) || (e2 != 1.0 && e2 != -1.0))
        throw ConfigError("spiral spec: eps1 and eps2 must be +1 or -1");
    spec.eps1 = static_cast<int>(e1);
    spec.eps2 = static_cast<int>(e2);
    spec.theta0 = j.value("theta0", 0.0);
    if (!j.contains("profile"))
        throw ConfigError("spiral spec: missing profile");
    spec.profile = profile_from_json(j.at("profile"));
    return spec;
}

SpiralSpec load_spiral_spec(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path.string() + ": JSON parse error: " + e.what());
    }
    return spiral_spec_from_json(j);
}

void write_polarmap(const std::filesystem::path& path, const PolarMap& map,
                    const PolarGrid& grid) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << "polarmap v1 nr " << grid.radii.size() << " ntheta " << grid.thetas.size()
        << "\n";
    char buf[160];
    for (double r : grid.radii) {
        for (double theta : grid.thetas) {
            std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g %.17g\n", r, theta,
                          map.R(r, theta), map.Theta(r, theta));
            out << buf;
        }
    }
    if (!out) throw IoError("write failed: " + path.string());
}

namespace {

struct PolarTable {
    std::vector<double> radii, thetas;
    std::vector<double> R, Theta; // row-major [ir * ntheta + it]
    int winding = 0;

    double theta_step() const { return thetas[1] - thetas[0]; }
};

// Bilinear interpolation over the sampled lattice; theta wraps with the
// winding continuation, radii clamp at the table edges.
double table_eval(const PolarTable& t, const std::vector<double>& values,
                  bool angular, double r, double theta) {
    const std::size_t nr = t.radii.size();
    const std::size_t nt = t.thetas.size();

    const double span = kTwoPi;
    const double rel = (theta - t.thetas.front()) / span;
    const double turns = std::floor(rel);
    const double theta_w = theta - span * turns;

    const double jt = (theta_w - t.thetas.front()) / t.theta_step();
    std::size_t j0 = static_cast<std::size_t>(jt);
    if (j0 >= nt) j0 = nt - 1;
    const double tj = jt - static_cast<double>(j0);
    const std::size_t j1 = (j0 + 1) % nt;
    // crossing the seam re-enters column 0 one winding later
    const double seam = (j0 + 1 == nt && angular) ? kTwoPi * t.winding : 0.0;

    double rr = r;
    if (rr <= t.radii.front()) rr = t.radii.front();
    if (rr >= t.radii.back()) rr = t.radii.back();
    std::size_t i0 = static_cast<std::size_t>(
        std::upper_bound(t.radii.begin(), t.radii.end(), rr) - t.radii.begin());
    if (i0 > 0) --i0;
    if (i0 >= nr - 1) i0 = nr - 2;
    const double ti = (rr - t.radii[i0]) / (t.radii[i0 + 1] - t.radii[i0]);

    auto v = [&](std::size_t ir, std::size_t it, bool wrapped) {
        double value = values[ir * nt + it];
        if (wrapped) value += seam;
        return value;
    };
    const double low = (1.0 - tj) * v(i0, j0, false) + tj * v(i0, j1, j0 + 1 == nt);
    const double high =
        (1.0 - tj) * v(i0 + 1, j0, false) + tj * v(i0 + 1, j1, j0 + 1 == nt);
    double out = (1.0 - ti) * low + ti * high;
    if (angular) out += kTwoPi * static_cast<double>(t.winding) * turns;
    return out;
}

} // namespace

LoadedPolarMap load_polarmap(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    std::string word, version;
    std::size_t nr = 0, nt = 0;
    std::string key1, key2;
    in >> word >> version >> key1 >> nr >> key2 >> nt;
    if (!in || word != "polarmap" || version != "v1" || key1 != "nr" ||
        key2 != "ntheta" || nr < 2 || nt < 4)
        throw IoError(path.string() + ": expected header 'polarmap v1 nr <n> ntheta <n>'");

    auto table = std::make_shared<PolarTable>();
    table->R.resize(nr * nt);
    table->Theta.resize(nr * nt);
    table->radii.reserve(nr);

    for (std::size_t ir = 0; ir < nr; ++ir) {
        for (std::size_t it = 0; it < nt; ++it) {
            double r, theta, R, Theta;
            if (!(in >> r >> theta >> R >> Theta))
                throw IoError(path.string() + ": truncated row block");
            if (it == 0) {
                if (!table->radii.empty() && !(r > table->radii.back()))
                    throw IoError(path.string() + ": radii must be strictly increasing");
                table->radii.push_back(r);
            } else if (r != table->radii.back()) {
                throw IoError(path.string() + ": radius changed mid-block");
            }
            if (ir == 0)
                table->thetas.push_back(theta);
            else if (theta != table->thetas[it])
                throw IoError(path.string() + ": theta lattice differs between rows");
            table->R[ir * nt + it] = R;
            table->Theta[ir * nt + it] = Theta;
        }
    }
    // uniform angle lattice check
    const double dt = table->thetas[1] - table->thetas[0];
    for (std::size_t it = 1; it < nt; ++it)
        if (std::fabs(table->thetas[it] - table->thetas[0] -
                      dt * static_cast<double>(it)) > 1e-9)
            throw IoError(path.string() + ": theta lattice must be uniform");
    if (std::fabs(dt * static_cast<double>(nt) - kTwoPi) > 1e-6)
        throw IoError(path.string() + ": theta lattice must cover the full circle");

    // winding per radius from the unwrapped row, required constant
    for (std::size_t ir = 0; ir < nr; ++ir) {
        const double first = table->Theta[ir * nt];
        const double last = table->Theta[ir * nt + nt - 1];
        const double full_turn = (last - first) * static_cast<double>(nt) /
                                 static_cast<double>(nt - 1);
        const int k = static_cast<int>(std::lround(full_turn / kTwoPi));
        if (ir == 0)
            table->winding = k;
        else if (k != table->winding)
            throw IoError(path.string() + ": winding number varies across radii");
    }

    LoadedPolarMap out;
    out.grid.radii = table->radii;
    out.grid.thetas = table->thetas;
    out.winding = table->winding;
    out.map.r_max = table->radii.back();
    out.map.R = [table](double r, double theta) {
        return table_eval(*table, table->R, false, r, theta);
    };
    out.map.Theta = [table](double r, double theta) {
        return table_eval(*table, table->Theta, true, r, theta);
    };
    return out;
}

void write_pgm(const std::filesystem::path& path, const BinaryGrid& grid) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << "P5\n" << grid.m << " " << grid.m << "\n255\n";
    for (int iy = 0; iy < grid.m; ++iy)
        for (int ix = 0; ix < grid.m; ++ix)
            out.put(grid.at(ix, iy) ? static_cast<char>(255) : static_cast<char>(0));
    if (!out) throw IoError("write failed: " + path.string());
}

BinaryGrid read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string magic;
    int w = 0, h = 0, maxval = 0;
    in >> magic >> w >> h >> maxval;
    if (magic != "P5" || w <= 0 || h <= 0 || w != h || maxval <= 0 || maxval > 255)
        throw IoError(path.string() + ": expected square binary PGM (P5)");
    in.get(); // single whitespace after maxval
    BinaryGrid grid;
    grid.m = w;
    grid.mask.resize(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    for (auto& v : grid.mask) {
        const int c = in.get();
        if (c == EOF) throw IoError(path.string() + ": truncated pixel data");
        v = c >= 128 ? 1 : 0;
    }
    return grid;
}

PlanarMap planar_map_from_json(const nlohmann::json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "identity") return identity_map();
        if (name == "scaling-2x") return scaling_2x_map();
        if (name == "shear-0.3") return shear_map();
        throw ConfigError("unknown builtin map: " + name);
    }
    if (j.is_object()) {
        if (j.contains("rotation")) return rotation_map(j.at("rotation").get<double>());
        if (j.contains("linear")) {
            const auto m = j.at("linear").get<std::vector<double>>();
            if (m.size() != 4)
                throw ConfigError("linear map needs [a11, a12, a21, a22]");
            return linear_map(m[0], m[1], m[2], m[3], "linear");
        }
        if (j.contains("spiral")) {
            const SpiralSpec spec = spiral_spec_from_json(j.at("spiral"));
            return from_polar(build_spiral(spec), "spiral");
        }
    }
    throw ConfigError("map: expected builtin name or {rotation|linear|spiral: ...}");
}

Rect rect_from_json(const nlohmann::json& j) {
    if (!j.contains("center") || !j.contains("halfwidths"))
        throw ConfigError("rect: needs center and halfwidths");
    const auto c = j.at("center").get<std::vector<double>>();
    const auto hw = j.at("halfwidths").get<std::vector<double>>();
    if (c.size() != 2 || hw.size() != 2)
        throw ConfigError("rect: center and halfwidths are pairs");
    return Rect({c[0], c[1]}, hw[0], hw[1], j.value("orientation", 0.0));
}

IsotropyConfig isotropy_config_from_json(const nlohmann::json& j) {
    IsotropyConfig cfg;
    if (!j.contains("field")) throw ConfigError("config: missing field block");
    const auto& f = j.at("field");
    std::vector<double> params;
    if (f.contains("params")) params = f.at("params").get<std::vector<double>>();
    cfg.field.law = RadialLaw::from_name(f.value("law", ""), params);
    cfg.field.n_harmonics = f.value("n_harmonics", 200);
    cfg.field.base_seed = f.value("seed", std::uint64_t{0});
    if (!j.contains("map")) throw ConfigError("config: missing map");
    cfg.map = planar_map_from_json(j.at("map"));
    if (!j.contains("rect")) throw ConfigError("config: missing rect");
    cfg.rect = rect_from_json(j.at("rect"));
    if (!j.contains("levels") || !j.contains("rotations"))
        throw ConfigError("config: missing levels or rotations");
    cfg.levels = j.at("levels").get<std::vector<double>>();
    cfg.rotations = j.at("rotations").get<std::vector<double>>();
    cfg.replicates = j.value("replicates", 0);
    cfg.resolution = j.value("resolution", 128);
    if (cfg.replicates < 2) throw ConfigError("config: replicates must be >= 2");
    if (cfg.resolution < 2) throw ConfigError("config: resolution must be >= 2");
    return cfg;
}

nlohmann::json to_json(const ValidationReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : report.violations)
        violations.push_back({{"condition", v.condition},
                              {"radius", v.radius},
                              {"measured", v.measured},
                              {"tolerance", v.tolerance}});
    return {{"passed", report.passed}, {"violations", violations}};
}

nlohmann::json to_json(const EquationResidual& r) {
    return {{"max", r.max_abs},
            {"rms", r.rms},
            {"argmax", {r.argmax_r, r.argmax_theta}}};
}

nlohmann::json to_json(const FghResiduals& r) {
    return {{"det", to_json(r.det)},
            {"radial_norm", to_json(r.radial)},
            {"angular_norm", to_json(r.angular)},
            {"max", r.max_abs()}};
}

nlohmann::json to_json(const SpiralVerdict& v) {
    return {{"is_spiral", v.is_spiral},
            {"eps1", v.eps1},
            {"theta0", v.theta0},
            {"winding", v.winding},
            {"diagnostics",
             {{"R_radiality", v.diagnostics.r_radiality},
              {"theta_radiality", v.diagnostics.theta_radiality},
              {"R_max_spread", v.diagnostics.r_max_spread},
              {"theta_max_spread", v.diagnostics.theta_max_spread}}},
            {"r_profile", v.r_profile},
            {"theta_bar_profile", v.theta_bar_profile}};
}

nlohmann::json to_json(const InvarianceReport& r) {
    return {{"shape", r.shape},
            {"transform-id", r.transform_id},
            {"rotations", r.rotations},
            {"values", r.values},
            {"rel_spread", r.rel_spread},
            {"pass", r.pass}};
}

nlohmann::json to_json(const IsotropyReport& r) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : r.cells)
        cells.push_back({{"u", c.u},
                         {"rotation", c.rotation},
                         {"mean_chi", c.mean_chi},
                         {"std_err", c.std_err},
                         {"z", c.z},
                         {"pass", c.pass}});
    return {{"pass", r.pass}, {"cells", cells}};
}

std::string isotropy_csv(const IsotropyReport& report) {
    std::string out = "u,rotation,mean_chi,std_err,z,pass\n";
    for (const auto& c : report.cells) {
        out += fmt("%.10g", c.u) + "," + fmt("%.10g", c.rotation) + "," +
               fmt("%.10g", c.mean_chi) + "," + fmt("%.10g", c.std_err) + "," +
               fmt("%.10g", c.z) + "," + (c.pass ? "1" : "0") + "\n";
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace isodeform
