#pragma once

#include <vector>

#include "smig/geometry.hpp"
#include "smig/scene.hpp"

namespace smig {

/// Complex material mismatch O_D = (eps_a - eps_b)/eps_b + i (sigma_a - sigma_b)/(omega eps_b).
struct Contrast {
    Complex value;
};

/// Cell-midpoint disk quadrature controls: (2*subdivisions)^2 cells over the
/// object's bounding box, keeping cell centers inside the disk.
struct QuadratureSpec {
    int subdivisions = 32;
};

void validate_quadrature(const QuadratureSpec& quad);

Contrast contrast(const DiskObject& obj, const Medium& medium);

/// E_inc(a, x) = -(i/4) H_0^(1)(kb |a - x|).
Complex incident_field(Point2 a, Point2 x, Complex kb);

/// Midpoint quadrature nodes for one disk plus the shared cell weight
/// (area per cell).
struct DiskQuadrature {
    std::vector<Point2> points;
    double weight;
};

DiskQuadrature disk_quadrature(const DiskObject& obj, const QuadratureSpec& quad);

/// Born-approximation S-parameter difference:
/// S(n,m) = -(i k0^2 / (4 omega mu_b)) sum_objects O_D Int_D E_inc(a_m,x) E_inc(a_n,x) dx.
Complex born_sparam(int n, int m, const Scene& scene, const QuadratureSpec& quad);

/// Far-field closed form S(n,m) = sum_objects A Int_D e^{-i kb (theta_m + theta_n).x} dx,
/// A = -k0^2 e^{2 i R kb} O_D / (32 R kb omega mu_b pi).
Complex farfield_sparam(int n, int m, const Scene& scene, const QuadratureSpec& quad);

}  // namespace smig
