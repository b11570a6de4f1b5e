#pragma once

#include <vector>

#include "smig/geometry.hpp"

namespace smig {

inline constexpr double kVacuumPermittivity = 8.854e-12;  // F/m
inline constexpr double kVacuumPermeability = 4e-7 * 3.14159265358979323846;  // H/m

/// Homogeneous background medium at a single operating frequency.
struct Medium {
    double permittivity;       // F/m (absolute)
    double conductivity;       // S/m
    double permeability;       // H/m, always mu_0
    double frequency;          // Hz
    double angular_frequency;  // rad/s
    double wavelength;         // m, 2*pi / Re(background wavenumber)
};

/// Builds a Medium from relative permittivity; validates invariants.
Medium make_medium(double frequency_hz, double eps_rel, double sigma);

struct Wavenumbers {
    double k0;   // rad/m, lossless background
    Complex kb;  // rad/m, lossy background, Re(kb) > 0
};

Wavenumbers wavenumbers(const Medium& medium);

/// Circular transceiver array; positions[n] = R (cos angles[n], sin angles[n]).
struct AntennaArray {
    std::vector<Point2> positions;
    std::vector<double> angles;
    double radius = 0.0;

    int count() const { return static_cast<int>(positions.size()); }
    Point2 unit_direction(int n) const {
        return {positions[n].x / radius, positions[n].y / radius};
    }
};

/// N antennas on a circle of radius R, angle of antenna n (1-based in the
/// usual convention) being 3*pi/2 - 2*pi*(n-1)/N.
AntennaArray uniform_array(int n_antennas, double radius);

struct DiskObject {
    Point2 center;
    double radius;        // m
    double permittivity;  // F/m (absolute)
    double conductivity;  // S/m
};

/// Uniform rectangular search grid, points enumerated row-major
/// (x varies slowest).
struct ImagingGrid {
    double x_min, x_max, y_min, y_max;
    int n_x, n_y;
    std::vector<Point2> points;

    double spacing_x() const { return (x_max - x_min) / n_x; }
    double spacing_y() const { return (y_max - y_min) / n_y; }
};

/// Cell-centered grid over [x_min,x_max] x [y_min,y_max].
ImagingGrid make_grid(double x_min, double x_max, double y_min, double y_max,
                      int n_x, int n_y);

struct Scene {
    Medium medium;
    AntennaArray array;
    std::vector<DiskObject> objects;
    ImagingGrid grid;
};

/// Checks Scene invariants (minimum antenna clearance 1e-4 m for objects and
/// grid points, objects strictly inside the region of interest); throws
/// ConfigError.
void validate_scene(const Scene& scene);

struct BornObjectReport {
    double size_lhs;       // sqrt(eps_a) * diam(D)
    double size_rhs;       // sqrt(eps_b) * lambda
    bool size_ok;
};

/// Weak-scatterer validity report. Warnings only; never aborts.
struct BornReport {
    std::vector<BornObjectReport> objects;
    double loss_ratio;  // omega*eps_b / sigma_b (infinite when sigma_b = 0)
    bool loss_ok;       // loss_ratio > 5
};

BornReport validate_born(const Scene& scene);

}  // namespace smig
