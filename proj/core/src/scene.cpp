#include "smig/scene.hpp"

#include <limits>
#include <numbers>

#include "smig/errors.hpp"

namespace smig {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kAntennaClearance = 1e-4;  // m
}  // namespace

Medium make_medium(double frequency_hz, double eps_rel, double sigma) {
    if (frequency_hz <= 0.0) throw ConfigError("frequency must be positive");
    if (eps_rel <= 0.0) throw ConfigError("permittivity must be positive");
    if (sigma < 0.0) throw ConfigError("conductivity must be nonnegative");
    Medium m;
    m.permittivity = eps_rel * kVacuumPermittivity;
    m.conductivity = sigma;
    m.permeability = kVacuumPermeability;
    m.frequency = frequency_hz;
    m.angular_frequency = 2.0 * kPi * frequency_hz;
    m.wavelength = 2.0 * kPi / wavenumbers(m).kb.real();
    return m;
}

Wavenumbers wavenumbers(const Medium& medium) {
    const double om = 2.0 * kPi * medium.frequency;
    Wavenumbers w;
    w.k0 = om * std::sqrt(medium.permittivity * medium.permeability);
    const Complex radicand = om * om * medium.permeability *
        (medium.permittivity - Complex(0.0, medium.conductivity / om));
    Complex kb = std::sqrt(radicand);
    if (kb.real() < 0.0) kb = -kb;
    w.kb = kb;
    return w;
}

AntennaArray uniform_array(int n_antennas, double radius) {
    if (n_antennas < 3) throw ConfigError("antenna array needs at least 3 elements");
    if (radius <= 0.0) throw ConfigError("array radius must be positive");
    AntennaArray a;
    a.radius = radius;
    a.positions.reserve(n_antennas);
    a.angles.reserve(n_antennas);
    for (int n = 0; n < n_antennas; ++n) {
        const double theta = 1.5 * kPi - 2.0 * kPi * n / n_antennas;
        a.angles.push_back(theta);
        a.positions.push_back({radius * std::cos(theta), radius * std::sin(theta)});
    }
    return a;
}

ImagingGrid make_grid(double x_min, double x_max, double y_min, double y_max,
                      int n_x, int n_y) {
    if (n_x < 1 || n_y < 1 || x_max <= x_min || y_max <= y_min)
        throw ConfigError("degenerate imaging grid");
    ImagingGrid g{x_min, x_max, y_min, y_max, n_x, n_y, {}};
    g.points.reserve(static_cast<std::size_t>(n_x) * n_y);
    const double hx = g.spacing_x();
    const double hy = g.spacing_y();
    for (int i = 0; i < n_x; ++i)
        for (int j = 0; j < n_y; ++j)
            g.points.push_back({x_min + (i + 0.5) * hx, y_min + (j + 0.5) * hy});
    return g;
}

void validate_scene(const Scene& scene) {
    auto clearance_ok = [&](Point2 p) {
        for (const Point2& a : scene.array.positions)
            if (norm(p - a) < kAntennaClearance) return false;
        return true;
    };
    for (const Point2& z : scene.grid.points)
        if (!clearance_ok(z)) throw ConfigError("grid point too close to an antenna");
    for (const DiskObject& obj : scene.objects) {
        if (obj.radius <= 0.0) throw ConfigError("object radius must be positive");
        if (!clearance_ok(obj.center))
            throw ConfigError("object too close to an antenna");
        if (obj.center.x - obj.radius <= scene.grid.x_min ||
            obj.center.x + obj.radius >= scene.grid.x_max ||
            obj.center.y - obj.radius <= scene.grid.y_min ||
            obj.center.y + obj.radius >= scene.grid.y_max)
            throw ConfigError("object disk not strictly inside the region of interest");
    }
}

BornReport validate_born(const Scene& scene) {
    BornReport r;
    const Medium& m = scene.medium;
    const double rhs = std::sqrt(m.permittivity / kVacuumPermittivity) * m.wavelength;
    for (const DiskObject& obj : scene.objects) {
        BornObjectReport o;
        o.size_lhs = std::sqrt(obj.permittivity / kVacuumPermittivity) * 2.0 * obj.radius;
        o.size_rhs = rhs;
        o.size_ok = o.size_lhs < o.size_rhs;
        r.objects.push_back(o);
    }
    if (m.conductivity == 0.0) {
        r.loss_ratio = std::numeric_limits<double>::infinity();
        r.loss_ok = true;
    } else {
        r.loss_ratio = m.angular_frequency * m.permittivity / m.conductivity;
        r.loss_ok = r.loss_ratio > 5.0;
    }
    return r;
}

}  // namespace smig
