#pragma once

#include <vector>

#include "smig/geometry.hpp"
#include "smig/scene.hpp"

namespace smig {

/// Truncation/tolerance controls shared by all Bessel-series evaluations.
struct SeriesParams {
    int truncation_L = 30;
    double tolerance = 1e-10;
};

/// Validates SeriesParams (truncation_L >= 1, tolerance > 0); throws ConfigError.
void validate_series_params(const SeriesParams& params);

/// Bessel function of the first kind, integer order s, complex argument.
/// Supported domain: |s| <= 200, |z| <= 500.
Complex bessel_j(int order, Complex z);

/// J_0(z) .. J_{max_order}(z) in one pass (shares the recurrence work).
/// Supported domain: 0 <= max_order <= 200, |z| <= 500.
std::vector<Complex> bessel_j_orders(int max_order, Complex z);

/// Hankel function of the first kind, order zero: H_0^(1) = J_0 + i Y_0.
/// Supported domain: z != 0, |z| <= 500, |arg z| < pi.
Complex hankel1_0(Complex z);

/// Far-field closed form (1+i) e^{i kb |a|} / sqrt(kb pi |a|) * e^{-i kb theta_a . z}
/// with theta_a = a/|a|; principal branch square root.
Complex hankel1_0_farfield(Complex kb, Point2 a, Point2 z);

/// Truncated Jacobi-Anger series for sum_n e^{i kb theta_n . d}:
/// N J_0(kb|d|) + sum_n sum_{0<|s|<=L} i^s J_s(kb|d|) e^{is(theta_n - phi_d)}.
Complex jacobi_anger(const AntennaArray& array, Complex kb, Point2 d,
                     const SeriesParams& params);

/// Truncated double sum E(x,L) = sum_n sum_{0<|s|<=L} i^s J_s(x) e^{is(theta_n - phi)}.
Complex epsilon_sum(const AntennaArray& array, double x, double phi, int L);

/// Default truncation rule L = max(30, ceil(2|kb| d_max) + 20), d_max the grid
/// diagonal of the scene's region of interest.
int default_truncation(Complex kb, double d_max);

}  // namespace smig
