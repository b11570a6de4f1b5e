#pragma once

#include <vector>

#include "smig/forward.hpp"
#include "smig/geometry.hpp"
#include "smig/scene.hpp"
#include "smig/specfun.hpp"

namespace smig {

/// Closed-form decomposition F(z,C) = |phi1 + phi2 + phi3|.
struct SeriesDecomposition {
    Complex phi1;
    Complex phi2;
    Complex phi3;
    double total;
    Point2 at;
};

/// Evaluates the three-term Bessel-series decomposition at z.
/// phi1: squared angular kernel at kb integrated over the objects;
/// phi2: kernel at 2 kb; phi3: (C/tau1) times the kernel at 2 kb |z|.
/// Each term carries the steering-vector norm correction N/||w(z)||^2
/// (identity for lossless media).
SeriesDecomposition phi_decomposition(Point2 z, const Scene& scene, Complex c,
                                      double tau1, const SeriesParams& params,
                                      const QuadratureSpec& quad);

/// C = 0 closed form: | N/((N-1) area(D)) Int_D kernel(kb)^2
///                      - 1/((N-1) area(D)) Int_D kernel(2 kb) |.
double zero_c_map(Point2 z, const Scene& scene, const SeriesParams& params,
                  const QuadratureSpec& quad);

/// Matrix of |E(x,L)| magnitudes, rows following xs and columns following Ls.
std::vector<std::vector<double>> table1(const AntennaArray& array,
                                        const std::vector<double>& xs,
                                        const std::vector<int>& ls, double phi);

struct FarfieldConditionReport {
    double min_value;  // min over antennas of |kb| |z - a_n|
    bool pass;         // min_value >= 2.5
};

FarfieldConditionReport farfield_condition(Point2 z, const Scene& scene);

}  // namespace smig
