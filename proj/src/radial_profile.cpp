#include "isodeform/radial_profile.hpp"

#include <cmath>
#include <memory>

#include "isodeform/errors.hpp"
#include "isodeform/interp.hpp"

namespace isodeform {

double RadialProfile::dh_eval(double r) const {
    if (dh) return dh(r);
    const double step = 1e-6 * r_max;
    return (h(r + step) - h(r - step)) / (2.0 * step);
}

RadialProfile identity_profile(double sign, double r_max) {
    RadialProfile p;
    p.f = [sign](double r) { return sign * r; };
    p.g = [](double) { return 1.0; };
    p.h = [](double r) { return r * r; };
    p.dh = [](double r) { return 2.0 * r; };
    p.gh_minus_f2 = [](double) { return 0.0; };
    p.r_max = r_max;
    return p;
}

RadialProfile unit_pitch_profile(double sign, double r_max) {
    RadialProfile p;
    p.f = [sign](double r) { return sign * r; };
    p.g = [](double r) { return 1.0 + r * r; };
    p.h = [](double r) { return r * r; };
    p.dh = [](double r) { return 2.0 * r; };
    p.gh_minus_f2 = [](double r) { return r * r * r * r; };
    p.r_max = r_max;
    return p;
}

RadialProfile power_law_profile(double k, double c, double sign, double r_max) {
    if (!(k > 0.0))
        throw ConfigError("power-law profile: exponent k must be positive");
    RadialProfile p;
    p.h = [k](double r) { return std::pow(r, 2.0 * k); };
    p.dh = [k](double r) { return 2.0 * k * std::pow(r, 2.0 * k - 1.0); };
    p.f = [k, sign](double r) { return sign * k * std::pow(r, 2.0 * k - 1.0); };
    p.g = [k, c](double r) {
        return k * k * std::pow(r, 2.0 * k - 2.0) + c * c * std::pow(r, 2.0 * k);
    };
    p.gh_minus_f2 = [k, c](double r) {
        const double hv = std::pow(r, 2.0 * k);
        return c * c * hv * hv;
    };
    p.r_max = r_max;
    return p;
}

RadialProfile table_profile(const std::vector<std::array<double, 4>>& rows,
                            double h0) {
    if (rows.size() < 4)
        throw ArgumentError("table profile: need at least 4 sampled rows");
    std::vector<double> r, f, g, h;
    r.reserve(rows.size());
    for (const auto& row : rows) {
        if (!(row[0] > 0.0))
            throw ArgumentError("table profile: radii must be positive");
        if (!r.empty() && !(row[0] > r.back()))
            throw ArgumentError("table profile: radii must be strictly increasing");
        r.push_back(row[0]);
        f.push_back(row[1]);
        g.push_back(row[2]);
        h.push_back(row[3]);
    }
    auto fi = std::make_shared<PchipInterpolant>(r, std::move(f));
    auto gi = std::make_shared<PchipInterpolant>(r, std::move(g));
    auto hi = std::make_shared<PchipInterpolant>(r, std::move(h));

    RadialProfile p;
    p.f = [fi](double x) { return (*fi)(x); };
    p.g = [gi](double x) { return (*gi)(x); };
    p.h = [hi](double x) { return (*hi)(x); };
    p.h0 = h0;
    p.r_max = r.back();
    p.analytic = false;
    return p;
}

RadialProfile named_profile(const std::string& name,
                            const std::vector<double>& params, double r_max) {
    auto sign_from = [&](std::size_t idx) {
        if (params.size() <= idx) return +1.0;
        const double s = params[idx];
        if (s != 1.0 && s != -1.0)
            throw ConfigError("profile sign parameter must be +1 or -1");
        return s;
    };
    if (name == "identity") {
        if (params.size() > 1) throw ConfigError("identity profile takes at most [sign]");
        return identity_profile(sign_from(0), r_max);
    }
    if (name == "unit-pitch-spiral") {
        if (params.size() > 1)
            throw ConfigError("unit-pitch-spiral profile takes at most [sign]");
        return unit_pitch_profile(sign_from(0), r_max);
    }
    if (name == "power-law") {
        if (params.size() < 2 || params.size() > 3)
            throw ConfigError("power-law profile takes k c [sign]");
        return power_law_profile(params[0], params[1], sign_from(2), r_max);
    }
    throw ConfigError("unknown profile name: " + name);
}

} // namespace isodeform
