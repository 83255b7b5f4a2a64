#include <doctest.h>

#include <cmath>
#include <vector>

#include "isodeform/map_analysis.hpp"
#include "isodeform/radial_profile.hpp"
#include "isodeform/spiral.hpp"

using namespace isodeform;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

// f = r, g = 1, h = r^3: h' = 3 r^2 != 2 f, and g h - f^2 = r^3 - r^2 < 0
// on (0, 1). Fails both the consistency check and the inequality.
RadialProfile cubic_h_profile() {
    RadialProfile p;
    p.f = [](double r) { return r; };
    p.g = [](double) { return 1.0; };
    p.h = [](double r) { return r * r * r; };
    p.dh = [](double r) { return 3.0 * r * r; };
    return p;
}

// Reference value for the drift integral by composite Simpson, independent of
// the adaptive scheme under test. Integrates in s = sqrt(x) with a tiny left
// cutoff so the endpoint singularity contributes nothing measurable.
double drift_oracle(const RadialProfile& p, double r, std::size_t panels) {
    auto integrand = [&](double x) {
        const double v = p.g(x) * p.h(x) - p.f(x) * p.f(x);
        return std::sqrt(std::max(v, 0.0)) / p.h(x);
    };
    const double s_lo = 1e-8, s_hi = std::sqrt(r);
    const double ds = (s_hi - s_lo) / static_cast<double>(2 * panels);
    double acc = 0.0;
    for (std::size_t i = 0; i < panels; ++i) {
        const double s0 = s_lo + 2.0 * ds * static_cast<double>(i);
        auto g = [&](double s) { return 2.0 * s * integrand(s * s); };
        acc += ds / 3.0 * (g(s0) + 4.0 * g(s0 + ds) + g(s0 + 2.0 * ds));
    }
    return acc;
}

} // namespace

TEST_CASE("validate_profile accepts the identity profile (gh = f^2 exactly)") {
    const auto report =
        validate_profile(identity_profile(), uniform_grid(0.1, 2.0, 64), 1e-9);
    CHECK(report.passed);
    CHECK(report.violations.empty());
}

TEST_CASE("validate_profile accepts the unit-pitch profile") {
    const auto report =
        validate_profile(unit_pitch_profile(), uniform_grid(0.1, 2.0, 64), 1e-9);
    CHECK(report.passed);
}

TEST_CASE("validate_profile rejects h = r^3 with g = 1 (gh < f^2 below r = 1)") {
    const auto report =
        validate_profile(cubic_h_profile(), uniform_grid(0.1, 2.0, 64), 1e-9);
    REQUIRE_FALSE(report.passed);
    bool found = false;
    for (const auto& v : report.violations)
        if (v.condition == "gh-ge-f2") {
            found = true;
            CHECK(v.radius < 1.0);   // first failure happens below r = 1
            CHECK(v.measured < 0.0); // gh - f^2 there
        }
    CHECK(found);
}

TEST_CASE("validate_profile flags a decreasing h") {
    RadialProfile p = identity_profile();
    p.h = [](double r) { return -r; };
    p.dh = [](double) { return -1.0; };
    const auto report = validate_profile(p, uniform_grid(0.1, 2.0, 16), 1e-9);
    REQUIRE_FALSE(report.passed);
    CHECK(report.violations.front().condition == "h-increasing");
}

TEST_CASE("validate_profile flags sign changes and zeros of f") {
    RadialProfile p = identity_profile();
    p.f = [](double r) { return r - 1.0; }; // zero at 1, sign change across it
    const auto report = validate_profile(p, uniform_grid(0.5, 2.0, 31), 1e-9);
    REQUIRE_FALSE(report.passed);
    bool sign_violation = false;
    for (const auto& v : report.violations)
        sign_violation |=
            v.condition == "f-constant-sign" || v.condition == "f-nonvanishing";
    CHECK(sign_violation);
}

TEST_CASE("validate_profile error paths") {
    CHECK_THROWS_AS(validate_profile(identity_profile(), {}, 1e-9), ArgumentError);
    CHECK_THROWS_AS(validate_profile(identity_profile(), {0.5, 0.4}, 1e-9),
                    ArgumentError);
    CHECK_THROWS_AS(validate_profile(identity_profile(), {-0.5, 0.4}, 1e-9),
                    ArgumentError);

    RadialProfile bad = identity_profile();
    bad.g = [](double r) { return r < 1.0 ? 1.0 : std::nan(""); };
    try {
        validate_profile(bad, uniform_grid(0.5, 2.0, 16), 1e-9);
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        CHECK(e.radius() >= 1.0);
    }
}

TEST_CASE("theta_bar: unit-pitch integrand is identically one") {
    SpiralSpec spec{+1, +1, 0.0, unit_pitch_profile()};
    CHECK(theta_bar(spec, 1.5, 1e-10) == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(theta_bar(spec, 2.0, 1e-10) == doctest::Approx(2.0).epsilon(1e-9));

    spec.eps2 = -1; // sign flip of the previous case
    CHECK(theta_bar(spec, 1.5, 1e-10) == doctest::Approx(-1.5).epsilon(1e-9));
}

TEST_CASE("theta_bar vanishes identically when gh = f^2") {
    SpiralSpec spec{+1, +1, 0.0, identity_profile()};
    CHECK(theta_bar(spec, 2.0, 1e-12) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(theta_bar(spec, 0.0, 1e-12) == 0.0);
}

TEST_CASE("theta_bar matches a dense Simpson oracle on a singular profile") {
    // g = f^2/h + q with q = r: the integrand behaves like r^(-1/2) at 0,
    // exactly the case the substitution has to tame.
    RadialProfile p;
    p.h = [](double r) { return r * r; };
    p.dh = [](double r) { return 2.0 * r; };
    p.f = [](double r) { return r; };
    p.g = [](double r) { return 1.0 + r; }; // f^2/h = 1, q = r
    SpiralSpec spec{+1, +1, 0.0, p};

    const double oracle = drift_oracle(p, 1.7, 1 << 18);
    const double value = theta_bar(spec, 1.7, 1e-11);
    CHECK(value == doctest::Approx(oracle).epsilon(1e-7));
}

TEST_CASE("theta_bar is odd in eps2 and zero at r = 0 (property)") {
    for (double c : {0.4, 0.9, 1.7}) {
        RadialProfile p = power_law_profile(1.3, c);
        SpiralSpec plus{+1, +1, 0.0, p};
        SpiralSpec minus{+1, -1, 0.0, p};
        CHECK(theta_bar(plus, 0.0) == 0.0);
        for (double r : {0.3, 0.9, 1.8})
            CHECK(theta_bar(plus, r, 1e-11) ==
                  doctest::Approx(-theta_bar(minus, r, 1e-11)).epsilon(1e-12));
        // the power-law drift integrand is the constant c
        CHECK(theta_bar(plus, 1.2, 1e-11) == doctest::Approx(1.2 * c).epsilon(1e-9));
    }
}

TEST_CASE("theta_bar quadrature convergence under tolerance halving") {
    RadialProfile p;
    p.h = [](double r) { return r * r * (1.0 + 0.5 * r); };
    p.dh = [](double r) { return 2.0 * r + 1.5 * r * r; };
    p.f = [p](double r) { return 0.5 * p.dh(r); };
    p.g = [p](double r) { return p.f(r) * p.f(r) / p.h(r) + 0.3 * r; };
    SpiralSpec spec{+1, +1, 0.0, p};

    double tol = 1e-6;
    double prev = theta_bar(spec, 1.9, tol);
    for (int i = 0; i < 6; ++i) {
        const double next = theta_bar(spec, 1.9, tol / 2.0);
        CHECK(std::fabs(next - prev) < tol);
        prev = next;
        tol /= 2.0;
    }
}

TEST_CASE("theta_bar rejects radii outside [0, r_max]") {
    SpiralSpec spec{+1, +1, 0.0, identity_profile()};
    CHECK_THROWS_AS(theta_bar(spec, 2.5), ArgumentError);
    CHECK_THROWS_AS(theta_bar(spec, -0.1), ArgumentError);
}

TEST_CASE("theta_bar reports divergence for a 1/r integrand") {
    // g = f^2/h + 1 gives gh - f^2 = h, integrand 1/sqrt(h) ~ 1/r: the
    // integral from 0 diverges even though monotonicity and gh >= f^2 hold.
    RadialProfile p;
    p.h = [](double r) { return r * r; };
    p.dh = [](double r) { return 2.0 * r; };
    p.f = [](double r) { return r; };
    p.g = [](double r) { return 1.0 + 1.0 / std::max(r * r, 1e-300); };
    SpiralSpec spec{+1, +1, 0.0, p};
    CHECK_THROWS_AS(theta_bar(spec, 1.0, 1e-10), DivergenceError);
}

TEST_CASE("theta_bar domain error when gh - f^2 dips below tolerance") {
    RadialProfile p = identity_profile();
    p.g = [](double r) { return 1.0 - 0.2 * r; }; // gh < f^2 for r > 0
    SpiralSpec spec{+1, +1, 0.0, p};
    CHECK_THROWS_AS(theta_bar(spec, 1.5, 1e-10), DomainError);
}

TEST_CASE("build_spiral: identity profile gives the identity map") {
    const PolarMap map = build_spiral({+1, +1, 0.0, identity_profile()});
    for (double r : {0.2, 1.0, 1.9})
        for (double theta : {0.0, 1.0, 4.0}) {
            CHECK(map.R(r, theta) == doctest::Approx(r).epsilon(1e-13));
            CHECK(map.Theta(r, theta) == doctest::Approx(theta).epsilon(1e-13));
        }
}

TEST_CASE("build_spiral: unit-pitch profile gives Theta = theta + r") {
    const PolarMap map = build_spiral({+1, +1, 0.0, unit_pitch_profile()});
    for (double r : {0.1, 0.7, 1.5, 2.0})
        CHECK(map.Theta(r, 0.3) == doctest::Approx(0.3 + r).epsilon(1e-11));
}

TEST_CASE("build_spiral: reflection case eps1 = -1, theta0 = pi/2") {
    RadialProfile p = identity_profile(-1.0); // f = -r
    const PolarMap map = build_spiral({-1, +1, kPi / 2, p});
    for (double r : {0.3, 1.2})
        for (double theta : {0.0, 0.9, 2.8})
            CHECK(map.Theta(r, theta) ==
                  doctest::Approx(-theta + kPi / 2).epsilon(1e-12));
    CHECK(map.R(1.2, 0.4) == doctest::Approx(1.2).epsilon(1e-13));
}

TEST_CASE("build_spiral residuals vanish against the generating profile") {
    const PolarGrid grid = PolarGrid::geometric(1e-3, 2.0, 48, 32);
    for (int eps1 : {+1, -1})
        for (int eps2 : {+1, -1}) {
            RadialProfile p = unit_pitch_profile(eps1);
            const PolarMap map = build_spiral({eps1, eps2, 0.7, p});
            const auto res = fgh_residuals(map, p, grid, DiffScheme::analytic());
            CHECK(res.max_abs() < 1e-10);
        }
}

TEST_CASE("build_spiral rejects inconsistent f (h = r^3 against f = r)") {
    try {
        build_spiral({+1, +1, 0.0, cubic_h_profile()});
        FAIL("expected ValidationFailure");
    } catch (const ValidationFailure& e) {
        bool consistency = false, inequality = false;
        for (const auto& v : e.report().violations) {
            consistency |= v.condition == "f-eq-eps1-dh-half";
            inequality |= v.condition == "gh-ge-f2";
        }
        CHECK(consistency);
        CHECK(inequality);
    }
}

TEST_CASE("build_spiral from a sampled table stays within the sampled tolerance") {
    std::vector<std::array<double, 4>> rows;
    for (double r = 0.02; r <= 2.0001; r += 0.005)
        rows.push_back({r, r, 1.0 + r * r, r * r}); // unit-pitch samples
    RadialProfile table = table_profile(rows);
    CHECK_FALSE(table.analytic);

    const PolarMap map = build_spiral({+1, +1, 0.0, table});
    const PolarGrid grid = PolarGrid::geometric(0.1, 1.9, 24, 16);
    const auto res = fgh_residuals(map, table, grid, DiffScheme::analytic());
    CHECK(res.max_abs() < 1e-4); // interpolation + differenced-h' noise
    for (double r : {0.5, 1.0, 1.5})
        CHECK(map.Theta(r, 0.0) == doctest::Approx(r).epsilon(1e-4));
}

TEST_CASE("named_profile registry") {
    CHECK_NOTHROW(named_profile("identity", {}));
    CHECK_NOTHROW(named_profile("unit-pitch-spiral", {-1.0}));
    CHECK_NOTHROW(named_profile("power-law", {1.5, 0.7}));
    CHECK_THROWS_AS(named_profile("nope", {}), ConfigError);
    CHECK_THROWS_AS(named_profile("power-law", {1.5}), ConfigError);
    CHECK_THROWS_AS(named_profile("identity", {0.5}), ConfigError);
}
