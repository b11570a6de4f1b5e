#include "smig/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "smig/errors.hpp"
#include "smig/forward.hpp"

namespace smig {

TestVector test_vector(Point2 z, const Scene& scene, VectorMode mode) {
    const int n = scene.array.count();
    const Wavenumbers wn = wavenumbers(scene.medium);
    TestVector w;
    w.at = z;
    w.components.resize(n);
    if (mode == VectorMode::exact) {
        for (int k = 0; k < n; ++k)
            w.components(k) = incident_field(scene.array.positions[k], z, wn.kb);
    } else {
        const Complex i(0.0, 1.0);
        const Complex kbc = std::conj(wn.kb);
        for (int k = 0; k < n; ++k)
            w.components(k) = std::exp(-i * kbc * dot(scene.array.unit_direction(k), z));
    }
    const double nrm = w.components.norm();
    if (nrm == 0.0) throw NumericalError("test_vector: zero steering vector");
    w.components /= nrm;
    return w;
}

double imaging_value(Point2 z, const SvdFactors& factors, int m,
                     const Scene& scene, VectorMode mode) {
    const int n = static_cast<int>(factors.singular_values.size());
    if (m < 1 || m > n) throw ConfigError("imaging_value: rank out of range");
    const TestVector w = test_vector(z, scene, mode);
    Complex sum = 0.0;
    for (int k = 0; k < m; ++k) {
        const Complex a =
            (w.components.adjoint() * factors.left_vectors.col(k))(0);
        const Complex b =
            (w.components.adjoint() * factors.right_vectors.col(k).conjugate())(0);
        sum += a * b;
    }
    return std::abs(sum);
}

ImagingMap imaging_map(const Scene& scene, const ScatteringMatrix& k,
                       const RankStrategy& strategy, VectorMode mode) {
    if (scene.grid.points.empty()) throw ConfigError("imaging_map: empty grid");
    const SvdFactors factors = svd(k);
    const int m = select_rank(factors, strategy);
    ImagingMap map;
    map.grid = scene.grid;
    map.constant_used =
        (k.diagonal_policy == DiagonalPolicy::constant) ? k.constant : Complex(0, 0);
    map.rank_used = m;
    map.values.resize(scene.grid.points.size());
    for (std::size_t i = 0; i < scene.grid.points.size(); ++i)
        map.values[i] = imaging_value(scene.grid.points[i], factors, m, scene, mode);
    return map;
}

PeakResult peak_extract(const ImagingMap& map, int count, double min_separation) {
    if (count < 1) throw ConfigError("peak_extract: count must be at least 1");
    const int nx = map.grid.n_x;
    const int ny = map.grid.n_y;
    auto at = [&](int i, int j) { return map.values[static_cast<std::size_t>(i) * ny + j]; };
    // Interior local maxima (value >= every 8-neighbor).
    std::vector<std::size_t> candidates;
    for (int i = 1; i < nx - 1; ++i)
        for (int j = 1; j < ny - 1; ++j) {
            const double v = at(i, j);
            bool is_max = true;
            for (int di = -1; di <= 1 && is_max; ++di)
                for (int dj = -1; dj <= 1; ++dj)
                    if ((di || dj) && at(i + di, j + dj) > v) {
                        is_max = false;
                        break;
                    }
            if (is_max) candidates.push_back(static_cast<std::size_t>(i) * ny + j);
        }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) {
                         if (map.values[a] != map.values[b])
                             return map.values[a] > map.values[b];
                         return a < b;
                     });
    PeakResult result;
    for (std::size_t idx : candidates) {
        if (static_cast<int>(result.points.size()) == count) break;
        const Point2 z = map.grid.points[idx];
        bool separated = true;
        for (const Point2& p : result.points)
            if (norm(z - p) < min_separation) {
                separated = false;
                break;
            }
        if (separated) {
            result.points.push_back(z);
            result.values.push_back(map.values[idx]);
        }
    }
    result.complete = static_cast<int>(result.points.size()) == count;
    return result;
}

}  // namespace smig
