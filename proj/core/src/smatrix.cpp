#include "smig/smatrix.hpp"

#include <algorithm>
#include <cmath>

#include "smig/errors.hpp"

namespace smig {

ScatteringMatrix assemble(const Scene& scene, DataSource source,
                          const QuadratureSpec& quad) {
    if (source == DataSource::external)
        throw ConfigError("assemble: external data must be loaded, not generated");
    const int n = scene.array.count();
    ScatteringMatrix k;
    k.entries = Eigen::MatrixXcd::Zero(n, n);
    k.diagonal_policy = DiagonalPolicy::measured;
    k.source = source;
    auto gen = (source == DataSource::born) ? born_sparam : farfield_sparam;
    for (int r = 0; r < n; ++r)
        for (int c = r; c < n; ++c) {
            const Complex v = gen(r, c, scene, quad);  // symmetric generator
            k.entries(r, c) = v;
            k.entries(c, r) = v;
        }
    if (!k.entries.allFinite())
        throw NumericalError("assemble: non-finite scattering entries");
    return k;
}

ScatteringMatrix mask_diagonal(const ScatteringMatrix& k, Complex c) {
    if (k.entries.rows() != k.entries.cols())
        throw ConfigError("mask_diagonal: matrix must be square");
    ScatteringMatrix out = k;
    out.entries.diagonal().setConstant(c);
    out.diagonal_policy = DiagonalPolicy::constant;
    out.constant = c;
    return out;
}

SvdFactors svd(const ScatteringMatrix& k) {
    if (k.entries.rows() != k.entries.cols())
        throw ConfigError("svd: matrix must be square");
    if (!k.entries.allFinite())
        throw NumericalError("svd: matrix has non-finite entries");
    Eigen::JacobiSVD<Eigen::MatrixXcd> dec(
        k.entries, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdFactors f;
    f.singular_values = dec.singularValues();
    f.left_vectors = dec.matrixU();
    f.right_vectors = dec.matrixV();
    return f;
}

int select_rank(const SvdFactors& factors, const RankStrategy& strategy) {
    const Eigen::VectorXd& tau = factors.singular_values;
    const int n = static_cast<int>(tau.size());
    if (n == 0) throw ConfigError("select_rank: empty spectrum");
    const double frob = tau.norm();
    if (tau(0) <= 1e-14 * std::max(frob, 1e-300) || tau(0) == 0.0)
        throw NumericalError("select_rank: no signal in the spectrum");
    switch (strategy.kind) {
        case RankStrategy::Kind::fixed:
            return std::clamp(strategy.m, 1, n);
        case RankStrategy::Kind::threshold: {
            int m = 0;
            for (int i = 0; i < n; ++i)
                if (tau(i) >= strategy.rho * tau(0)) ++m;
            return std::max(1, m);
        }
        case RankStrategy::Kind::gap: {
            const int limit = std::max(1, std::min(n - 1, n / 2));
            int best = 1;
            double best_gap = -1.0;
            for (int i = 0; i < limit; ++i) {
                const double denom = std::max(tau(i + 1), 1e-300);
                const double gap = (tau(i) - tau(i + 1)) / denom;
                if (gap > best_gap) {
                    best_gap = gap;
                    best = i + 1;
                }
            }
            return best;
        }
    }
    throw ConfigError("select_rank: unknown strategy");
}

}  // namespace smig
