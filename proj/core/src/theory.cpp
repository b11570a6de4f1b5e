#include "smig/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "smig/errors.hpp"

namespace smig {

namespace {

constexpr double kPi = std::numbers::pi;

/// Angular harmonics of the array: e[s+L] = sum_n e^{i s theta_n}, |s| <= L.
std::vector<Complex> array_harmonics(const AntennaArray& array, int l) {
    std::vector<Complex> e(2 * l + 1);
    for (int s = -l; s <= l; ++s) {
        Complex sum = 0.0;
        for (double th : array.angles) sum += std::exp(Complex(0.0, s * th));
        e[s + l] = sum;
    }
    return e;
}

/// kernel(arg; d) = J_0(arg) + (1/N) sum_{s != 0} i^s J_s(arg) e^{-is phi_d} E_s
/// with arg = karg |d| and phi_d the polar angle of d.
Complex angular_kernel(Complex karg, Point2 d, const std::vector<Complex>& e,
                       int l, double n_ant) {
    const double r = norm(d);
    const double phi = polar_angle(d);
    const std::vector<Complex> js = bessel_j_orders(l, karg * r);
    Complex total = js[0];
    Complex ipow = 1.0;
    const Complex i(0.0, 1.0);
    for (int s = 1; s <= l; ++s) {
        ipow *= i;
        // i^{-s} J_{-s} = i^s J_s, so the -s term mirrors the +s term.
        const Complex pos = e[s + l] * std::exp(Complex(0.0, -s * phi));
        const Complex neg = e[-s + l] * std::exp(Complex(0.0, s * phi));
        if (std::abs(pos) + std::abs(neg) < 1e-9) continue;
        total += ipow * js[s] * (pos + neg) / n_ant;
    }
    return total;
}

/// Squared norm of the unnormalized far-field steering phases
/// w_n = e^{-i conj(kb) theta_n . z}.
double steering_norm_sq(const AntennaArray& array, Complex kb, Point2 z) {
    double total = 0.0;
    for (int n = 0; n < array.count(); ++n)
        total += std::norm(std::exp(Complex(0.0, -1.0) * std::conj(kb) *
                                    dot(array.unit_direction(n), z)));
    return total;
}

}  // namespace

SeriesDecomposition phi_decomposition(Point2 z, const Scene& scene, Complex c,
                                      double tau1, const SeriesParams& params,
                                      const QuadratureSpec& quad) {
    if (!(tau1 > 0.0)) throw ConfigError("phi_decomposition: tau1 must be positive");
    if (scene.objects.empty())
        throw ConfigError("phi_decomposition: scene needs at least one object");
    validate_series_params(params);
    const int l = params.truncation_L;
    const Medium& med = scene.medium;
    const Wavenumbers wn = wavenumbers(med);
    const double n_ant = static_cast<double>(scene.array.count());
    const double r_array = scene.array.radius;
    const Complex i(0.0, 1.0);
    const std::vector<Complex> e = array_harmonics(scene.array, l);

    SeriesDecomposition out;
    out.at = z;
    out.phi1 = 0.0;
    out.phi2 = 0.0;
    for (const DiskObject& obj : scene.objects) {
        const DiskQuadrature q = disk_quadrature(obj, quad);
        const Complex o = contrast(obj, med).value;
        const Complex pref = n_ant * med.angular_frequency * med.permittivity *
                             std::exp(2.0 * i * r_array * wn.kb) * o /
                             (32.0 * r_array * wn.kb * tau1 * kPi);
        Complex int1 = 0.0, int2 = 0.0;
        for (const Point2& x : q.points) {
            const Point2 d = z - x;
            const Complex k1 = angular_kernel(wn.kb, d, e, l, n_ant);
            int1 += k1 * k1;
            int2 += angular_kernel(2.0 * wn.kb, d, e, l, n_ant);
        }
        out.phi1 += pref * q.weight * int1;
        out.phi2 += -(pref / n_ant) * q.weight * int2;
    }
    out.phi3 = (c / tau1) * angular_kernel(2.0 * wn.kb, z, e, l, n_ant);

    const double correction = n_ant / steering_norm_sq(scene.array, wn.kb, z);
    out.phi1 *= correction;
    out.phi2 *= correction;
    out.phi3 *= correction;
    out.total = std::abs(out.phi1 + out.phi2 + out.phi3);
    return out;
}

double zero_c_map(Point2 z, const Scene& scene, const SeriesParams& params,
                  const QuadratureSpec& quad) {
    if (scene.objects.empty())
        throw ConfigError("zero_c_map: scene needs at least one object");
    validate_series_params(params);
    const int l = params.truncation_L;
    const Wavenumbers wn = wavenumbers(scene.medium);
    const double n_ant = static_cast<double>(scene.array.count());
    const std::vector<Complex> e = array_harmonics(scene.array, l);
    double area = 0.0;
    Complex int1 = 0.0, int2 = 0.0;
    for (const DiskObject& obj : scene.objects) {
        area += kPi * obj.radius * obj.radius;
        const DiskQuadrature q = disk_quadrature(obj, quad);
        for (const Point2& x : q.points) {
            const Point2 d = z - x;
            const Complex k1 = angular_kernel(wn.kb, d, e, l, n_ant);
            int1 += q.weight * k1 * k1;
            int2 += q.weight * angular_kernel(2.0 * wn.kb, d, e, l, n_ant);
        }
    }
    const double denom = (n_ant - 1.0) * area;
    return std::abs(n_ant / denom * int1 - int2 / denom);
}

std::vector<std::vector<double>> table1(const AntennaArray& array,
                                        const std::vector<double>& xs,
                                        const std::vector<int>& ls, double phi) {
    std::vector<std::vector<double>> out;
    out.reserve(xs.size());
    for (double x : xs) {
        std::vector<double> row;
        row.reserve(ls.size());
        for (int l : ls) row.push_back(std::abs(epsilon_sum(array, x, phi, l)));
        out.push_back(std::move(row));
    }
    return out;
}

FarfieldConditionReport farfield_condition(Point2 z, const Scene& scene) {
    const Wavenumbers wn = wavenumbers(scene.medium);
    const double kb_mag = std::abs(wn.kb);
    double best = std::numeric_limits<double>::infinity();
    for (const Point2& a : scene.array.positions)
        best = std::min(best, kb_mag * norm(z - a));
    return {best, best >= 2.5};
}

}  // namespace smig
