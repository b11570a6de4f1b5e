#pragma once

#include <Eigen/Dense>
#include <vector>

#include "smig/geometry.hpp"
#include "smig/scene.hpp"
#include "smig/smatrix.hpp"

namespace smig {

enum class VectorMode { exact, farfield };

/// Unit steering vector W(z).
struct TestVector {
    Eigen::VectorXcd components;
    Point2 at;
};

/// Exact mode stacks incident-field values E_inc(a_n, z) and normalizes;
/// farfield mode uses plane-wave phases e^{-i conj(kb) theta_n . z}, normalized.
TestVector test_vector(Point2 z, const Scene& scene, VectorMode mode);

/// F(z) = | sum_{n<=M} <W(z),U_n> <W(z), conj(V_n)> | with <a,b> = a^* b.
double imaging_value(Point2 z, const SvdFactors& factors, int m,
                     const Scene& scene, VectorMode mode);

struct ImagingMap {
    ImagingGrid grid;
    std::vector<double> values;  // row-major, matching grid.points
    Complex constant_used{0.0, 0.0};
    int rank_used = 0;
};

ImagingMap imaging_map(const Scene& scene, const ScatteringMatrix& k,
                       const RankStrategy& strategy, VectorMode mode);

struct PeakResult {
    std::vector<Point2> points;
    std::vector<double> values;
    bool complete = true;  // false when fewer maxima exist than requested
};

/// Greedy selection of local maxima in descending value with pairwise
/// separation >= min_separation; ties broken by row-major index order.
PeakResult peak_extract(const ImagingMap& map, int count, double min_separation);

}  // namespace smig
