#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "smig/errors.hpp"
#include "smig/imaging.hpp"
#include "smig/theory.hpp"

using namespace smig;

namespace {

constexpr double kPi = std::numbers::pi;

Scene scene_with(std::vector<DiskObject> objects, int grid_n = 8) {
    Scene s;
    s.medium = make_medium(1e9, 20.0, 0.2);
    s.array = uniform_array(16, 0.09);
    s.objects = std::move(objects);
    s.grid = make_grid(-0.08, 0.08, -0.08, 0.08, grid_n, grid_n);
    return s;
}

Scene pointlike_scene() {
    return scene_with({{{0.01, 0.03}, 0.002, 55.0 * kVacuumPermittivity, 1.2}});
}

}  // namespace

TEST_CASE("phi3 vanishes at C = 0 and is linear in C") {
    const Scene s = pointlike_scene();
    const SeriesParams params{60, 1e-10};
    const QuadratureSpec quad{8};
    const Point2 z{0.02, -0.01};

    const SeriesDecomposition d0 = phi_decomposition(z, s, Complex(0, 0), 1.0, params, quad);
    CHECK(d0.phi3 == Complex(0.0, 0.0));
    CHECK(d0.total == doctest::Approx(std::abs(d0.phi1 + d0.phi2 + d0.phi3)).epsilon(1e-12));

    const Complex c1(0.02, -0.01), c2(-0.007, 0.03);
    const Complex p1 = phi_decomposition(z, s, c1, 1.0, params, quad).phi3;
    const Complex p2 = phi_decomposition(z, s, c2, 1.0, params, quad).phi3;
    const Complex p12 = phi_decomposition(z, s, c1 + c2, 1.0, params, quad).phi3;
    CHECK(std::abs(p12 - (p1 + p2)) < 1e-12 * std::max(1.0, std::abs(p12)));

    // Doubling |C| doubles the artifact term exactly.
    const Complex pd = phi_decomposition(z, s, 2.0 * c1, 1.0, params, quad).phi3;
    CHECK(std::abs(pd - 2.0 * p1) < 1e-12 * std::abs(pd));

    CHECK_THROWS_AS(phi_decomposition(z, s, c1, 0.0, params, quad), ConfigError);
    CHECK_THROWS_AS(phi_decomposition(z, scene_with({}), c1, 1.0, params, quad),
                    ConfigError);
}

TEST_CASE("series decomposition equals the bilinear form on far-field data") {
    const Scene s = pointlike_scene();
    const ScatteringMatrix k0 = mask_diagonal(
        assemble(s, DataSource::farfield, QuadratureSpec{32}), Complex(0.0, 0.0));
    const SvdFactors f = svd(k0);
    const double tau1 = f.singular_values(0);
    const SeriesParams params{60, 1e-10};
    const QuadratureSpec quad{32};

    for (const Point2 z : {Point2{0.0, 0.0}, {0.01, 0.03}, {-0.04, 0.02}, {0.05, -0.05}}) {
        const TestVector w = test_vector(z, s, VectorMode::farfield);
        const double bilinear = std::abs((w.components.adjoint() * k0.entries *
                                          w.components.conjugate())(0)) /
                                tau1;
        const double series =
            phi_decomposition(z, s, Complex(0.0, 0.0), tau1, params, quad).total;
        CHECK(std::abs(series - bilinear) < 1e-8 * std::max(bilinear, 1e-3));
    }
}

TEST_CASE("series output is converged in the truncation order") {
    const Scene s = pointlike_scene();
    const QuadratureSpec quad{8};
    const Wavenumbers wn = wavenumbers(s.medium);
    const int l_default = default_truncation(wn.kb, 0.16 * std::numbers::sqrt2);
    for (const Point2 z : {Point2{0.01, 0.03}, {-0.05, 0.0}}) {
        const double a =
            phi_decomposition(z, s, Complex(0, 0), 1.0, {l_default, 1e-10}, quad).total;
        const double b =
            phi_decomposition(z, s, Complex(0, 0), 1.0, {l_default + 10, 1e-10}, quad)
                .total;
        CHECK(std::abs(a - b) < 1e-8 * std::abs(b));
    }
}

TEST_CASE("zero_c_map profile behaviour") {
    const Scene s = scene_with({{{0.01, 0.03}, 0.01, 55.0 * kVacuumPermittivity, 1.2}});
    const SeriesParams params{60, 1e-10};
    const QuadratureSpec quad{8};
    const Wavenumbers wn = wavenumbers(s.medium);

    // Near-unity at the object's center, small far away (Bessel decay).
    const double at_center = zero_c_map({0.01, 0.03}, s, params, quad);
    CHECK(at_center > 0.6);
    CHECK(at_center < 1.2);
    const double far_distance = 10.0 / std::abs(wn.kb);
    const Point2 far{0.01 - far_distance - 0.02, 0.03};
    CHECK(zero_c_map(far, s, params, quad) < 0.3);

    // Profile correlation with the full decomposition at C = 0 exceeds 0.99.
    const ScatteringMatrix k0 = mask_diagonal(
        assemble(s, DataSource::farfield, QuadratureSpec{8}), Complex(0.0, 0.0));
    const double tau1 = svd(k0).singular_values(0);
    std::vector<double> a, b;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            const Point2 z{-0.06 + 0.02 * i, -0.06 + 0.02 * j};
            a.push_back(zero_c_map(z, s, params, quad));
            b.push_back(phi_decomposition(z, s, Complex(0, 0), tau1, params, quad).total);
        }
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= a.size();
    mb /= b.size();
    double num = 0.0, da = 0.0, db = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - ma) * (b[i] - mb);
        da += (a[i] - ma) * (a[i] - ma);
        db += (b[i] - mb) * (b[i] - mb);
    }
    CHECK(num / std::sqrt(da * db) > 0.99);
}

TEST_CASE("table1 reproduction and the three-antenna contrast") {
    const std::vector<double> xs = {0.1, 0.3, 0.5, 0.7, 1.0};
    const std::vector<int> ls = {1, 3, 5, 10, 15};

    const auto t16 = table1(uniform_array(16, 0.09), xs, ls, 0.0);
    for (const auto& row : t16)
        for (double v : row) CHECK(v <= 1e-12);

    const auto t3 = table1(uniform_array(3, 0.09), xs, ls, kPi / 6.0);
    double worst = 0.0;
    for (const auto& row : t3)
        for (double v : row) worst = std::max(worst, v);
    CHECK(worst > 1e-3);

    CHECK_THROWS_AS(table1(uniform_array(16, 0.09), xs, {0}, 0.0), ConfigError);
}

TEST_CASE("farfield_condition report") {
    const Scene s = pointlike_scene();
    const FarfieldConditionReport at_origin = farfield_condition({0.0, 0.0}, s);
    CHECK(at_origin.min_value == doctest::Approx(8.503).epsilon(1e-3));
    CHECK(at_origin.pass);

    // 0.0026 m from the bottom antenna.
    const FarfieldConditionReport close = farfield_condition({0.0, -0.0874}, s);
    CHECK_FALSE(close.pass);

    // Monotone in the distance to the nearest antenna: scaling z toward the
    // middle of the array improves the minimum.
    CHECK(farfield_condition({0.0, -0.05}, s).min_value >
          farfield_condition({0.0, -0.07}, s).min_value);
}
