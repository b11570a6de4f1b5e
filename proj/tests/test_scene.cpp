#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "smig/errors.hpp"
#include "smig/scene.hpp"

using namespace smig;

namespace {
constexpr double kPi = std::numbers::pi;

Medium example_medium() { return make_medium(1e9, 20.0, 0.2); }
}  // namespace

TEST_CASE("uniform_array angle formula and invariants") {
    const AntennaArray a16 = uniform_array(16, 0.09);
    CHECK(a16.count() == 16);
    CHECK(a16.positions[0].x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(a16.positions[0].y == doctest::Approx(-0.09).epsilon(1e-15));

    const AntennaArray a4 = uniform_array(4, 1.0);
    CHECK(a4.angles[0] == doctest::Approx(1.5 * kPi));
    CHECK(a4.angles[1] == doctest::Approx(kPi));
    CHECK(a4.angles[2] == doctest::Approx(0.5 * kPi));
    CHECK(a4.angles[3] == doctest::Approx(0.0));

    Point2 sum{0.0, 0.0};
    for (const Point2& p : a16.positions) {
        CHECK(std::abs(norm(p) - 0.09) < 1e-15);
        sum = sum + p;
    }
    CHECK(norm(sum) < 1e-12 * 0.09 * 16);

    CHECK_THROWS_AS(uniform_array(2, 0.09), ConfigError);
    CHECK_THROWS_AS(uniform_array(16, 0.0), ConfigError);
}

TEST_CASE("wavenumbers of the lossless and lossy media") {
    const Medium lossless = make_medium(1e9, 20.0, 0.0);
    const Wavenumbers w0 = wavenumbers(lossless);
    CHECK(w0.k0 == doctest::Approx(93.72804467861253).epsilon(1e-12));
    CHECK(w0.kb.real() == doctest::Approx(w0.k0).epsilon(1e-12));
    CHECK(w0.kb.imag() == 0.0);

    const Wavenumbers w = wavenumbers(example_medium());
    CHECK(w.kb.real() == doctest::Approx(94.10285097072938).epsilon(1e-10));
    CHECK(w.kb.imag() == doctest::Approx(-8.39048279560354).epsilon(1e-10));
    CHECK(w.kb.real() > 0.0);

    // kb^2 reproduces the radicand to 1e-12 relative.
    const double om = example_medium().angular_frequency;
    const Complex rad = om * om * kVacuumPermeability *
                        (example_medium().permittivity - Complex(0.0, 0.2 / om));
    CHECK(std::abs(w.kb * w.kb - rad) / std::abs(rad) < 1e-12);

    CHECK(example_medium().wavelength ==
          doctest::Approx(2.0 * kPi / w.kb.real()).epsilon(1e-14));
    CHECK_THROWS_AS(make_medium(-1.0, 20.0, 0.0), ConfigError);
    CHECK_THROWS_AS(make_medium(1e9, 0.0, 0.0), ConfigError);
    CHECK_THROWS_AS(make_medium(1e9, 20.0, -0.1), ConfigError);
}

TEST_CASE("make_grid is deterministic row-major") {
    const ImagingGrid g = make_grid(-0.08, 0.08, -0.08, 0.08, 4, 4);
    CHECK(g.points.size() == 16);
    CHECK(g.spacing_x() == doctest::Approx(0.04));
    // Row-major: x varies slowest.
    CHECK(g.points[0].x == doctest::Approx(-0.06));
    CHECK(g.points[0].y == doctest::Approx(-0.06));
    CHECK(g.points[1].x == doctest::Approx(-0.06));
    CHECK(g.points[1].y == doctest::Approx(-0.02));
    CHECK(g.points[4].x == doctest::Approx(-0.02));

    const ImagingGrid g2 = make_grid(-0.08, 0.08, -0.08, 0.08, 4, 4);
    for (std::size_t i = 0; i < g.points.size(); ++i)
        CHECK(g.points[i] == g2.points[i]);  // bit-identical

    CHECK_THROWS_AS(make_grid(0.0, 0.0, -1.0, 1.0, 4, 4), ConfigError);
    CHECK_THROWS_AS(make_grid(-1.0, 1.0, -1.0, 1.0, 0, 4), ConfigError);
}

TEST_CASE("validate_scene guards antenna proximity and object placement") {
    Scene s;
    s.medium = example_medium();
    s.array = uniform_array(16, 0.09);
    s.grid = make_grid(-0.08, 0.08, -0.08, 0.08, 32, 32);
    s.objects = {{{0.01, 0.03}, 0.01, 55.0 * kVacuumPermittivity, 1.2}};
    CHECK_NOTHROW(validate_scene(s));

    Scene bad = s;
    bad.objects[0].center = {0.0, -0.09};  // on an antenna
    CHECK_THROWS_AS(validate_scene(bad), ConfigError);

    bad = s;
    bad.objects[0].center = {0.075, 0.0};  // disk pokes out of the ROI
    CHECK_THROWS_AS(validate_scene(bad), ConfigError);

    bad = s;
    bad.objects[0].radius = -0.01;
    CHECK_THROWS_AS(validate_scene(bad), ConfigError);
}

TEST_CASE("validate_born reports weak-scatterer conditions") {
    Scene s;
    s.medium = example_medium();
    s.array = uniform_array(16, 0.09);
    s.grid = make_grid(-0.08, 0.08, -0.08, 0.08, 8, 8);

    SUBCASE("small high-permittivity object passes the size condition") {
        s.objects = {{{0.01, 0.03}, 0.01, 55.0 * kVacuumPermittivity, 1.2}};
        const BornReport r = validate_born(s);
        REQUIRE(r.objects.size() == 1);
        CHECK(r.objects[0].size_lhs == doctest::Approx(0.1483).epsilon(1e-3));
        CHECK(r.objects[0].size_rhs == doctest::Approx(0.2987).epsilon(1e-3));
        CHECK(r.objects[0].size_ok);
        CHECK(r.loss_ratio == doctest::Approx(5.5634).epsilon(1e-3));
        CHECK(r.loss_ok);
    }
    SUBCASE("large object is flagged but not rejected") {
        s.objects = {{{0.03, 0.03}, 0.048, 15.0 * kVacuumPermittivity, 0.5}};
        const BornReport r = validate_born(s);
        CHECK(r.objects[0].size_lhs == doctest::Approx(0.3718).epsilon(1e-3));
        CHECK_FALSE(r.objects[0].size_ok);
    }
    SUBCASE("vanishing radius always passes") {
        s.objects = {{{0.01, 0.03}, 1e-9, 80.0 * kVacuumPermittivity, 5.0}};
        CHECK(validate_born(s).objects[0].size_ok);
    }
    SUBCASE("lossless background has infinite loss ratio") {
        s.medium = make_medium(1e9, 20.0, 0.0);
        s.objects = {{{0.01, 0.03}, 0.01, 55.0 * kVacuumPermittivity, 1.2}};
        const BornReport r = validate_born(s);
        CHECK(std::isinf(r.loss_ratio));
        CHECK(r.loss_ok);
    }
}
