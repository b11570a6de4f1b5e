#include "smig/forward.hpp"

#include <cmath>
#include <numbers>

#include "smig/errors.hpp"
#include "smig/specfun.hpp"

namespace smig {

namespace {
constexpr double kPi = std::numbers::pi;
}

void validate_quadrature(const QuadratureSpec& quad) {
    if (quad.subdivisions < 4)
        throw ConfigError("quadrature subdivisions must be at least 4");
}

Contrast contrast(const DiskObject& obj, const Medium& medium) {
    const double om = medium.angular_frequency;
    Contrast c;
    c.value = Complex((obj.permittivity - medium.permittivity) / medium.permittivity,
                      (obj.conductivity - medium.conductivity) /
                          (om * medium.permittivity));
    return c;
}

Complex incident_field(Point2 a, Point2 x, Complex kb) {
    const double r = norm(a - x);
    if (r == 0.0)
        throw NumericalError("incident_field: evaluation point coincides with antenna");
    return Complex(0.0, -0.25) * hankel1_0(kb * r);
}

DiskQuadrature disk_quadrature(const DiskObject& obj, const QuadratureSpec& quad) {
    validate_quadrature(quad);
    const int n = 2 * quad.subdivisions;
    const double h = 2.0 * obj.radius / n;
    DiskQuadrature q;
    q.weight = h * h;
    q.points.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        const double x = obj.center.x - obj.radius + (i + 0.5) * h;
        for (int j = 0; j < n; ++j) {
            const double y = obj.center.y - obj.radius + (j + 0.5) * h;
            const double dx = x - obj.center.x;
            const double dy = y - obj.center.y;
            if (dx * dx + dy * dy < obj.radius * obj.radius)
                q.points.push_back({x, y});
        }
    }
    if (q.points.empty())
        throw NumericalError("disk_quadrature: no cell centers inside the disk");
    return q;
}

Complex born_sparam(int n, int m, const Scene& scene, const QuadratureSpec& quad) {
    const Medium& med = scene.medium;
    const Wavenumbers wn = wavenumbers(med);
    const double om = med.angular_frequency;
    const Complex pref = Complex(0.0, -1.0) * wn.k0 * wn.k0 /
                         (4.0 * om * med.permeability);
    Complex total = 0.0;
    for (const DiskObject& obj : scene.objects) {
        const DiskQuadrature q = disk_quadrature(obj, quad);
        const Complex o = contrast(obj, med).value;
        Complex integral = 0.0;
        for (const Point2& x : q.points)
            integral += incident_field(scene.array.positions[m], x, wn.kb) *
                        incident_field(scene.array.positions[n], x, wn.kb);
        total += pref * o * q.weight * integral;
    }
    return total;
}

Complex farfield_sparam(int n, int m, const Scene& scene, const QuadratureSpec& quad) {
    const Medium& med = scene.medium;
    const Wavenumbers wn = wavenumbers(med);
    const double om = med.angular_frequency;
    const double r_array = scene.array.radius;
    const Complex i(0.0, 1.0);
    const Point2 tn = scene.array.unit_direction(n);
    const Point2 tm = scene.array.unit_direction(m);
    const Point2 tsum = tn + tm;
    Complex total = 0.0;
    for (const DiskObject& obj : scene.objects) {
        const DiskQuadrature q = disk_quadrature(obj, quad);
        const Complex o = contrast(obj, med).value;
        const Complex amp = -wn.k0 * wn.k0 * std::exp(2.0 * i * r_array * wn.kb) * o /
                            (32.0 * r_array * wn.kb * om * med.permeability * kPi);
        Complex integral = 0.0;
        for (const Point2& x : q.points)
            integral += std::exp(-i * wn.kb * dot(tsum, x));
        total += amp * q.weight * integral;
    }
    return total;
}

}  // namespace smig
