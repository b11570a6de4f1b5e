#pragma once

#include <Eigen/Dense>

#include "smig/forward.hpp"
#include "smig/geometry.hpp"
#include "smig/scene.hpp"

namespace smig {

enum class DataSource { born, farfield, external };

enum class DiagonalPolicy { measured, constant };

/// N x N complex matrix of S-parameter differences with diagonal provenance.
struct ScatteringMatrix {
    Eigen::MatrixXcd entries;
    DiagonalPolicy diagonal_policy = DiagonalPolicy::measured;
    Complex constant{0.0, 0.0};  // meaningful when diagonal_policy == constant
    DataSource source = DataSource::born;

    int size() const { return static_cast<int>(entries.rows()); }
};

/// SVD of the scattering matrix: K = sum_n tau_n U_n V_n^*.
struct SvdFactors {
    Eigen::VectorXd singular_values;  // descending
    Eigen::MatrixXcd left_vectors;    // columns U_n
    Eigen::MatrixXcd right_vectors;   // columns V_n
};

/// Builds the full synthetic matrix from the chosen generator
/// (diagonal included; policy = measured).
ScatteringMatrix assemble(const Scene& scene, DataSource source,
                          const QuadratureSpec& quad);

/// Replaces the diagonal with the constant C; off-diagonal entries untouched.
ScatteringMatrix mask_diagonal(const ScatteringMatrix& k, Complex c);

SvdFactors svd(const ScatteringMatrix& k);

struct RankStrategy {
    enum class Kind { gap, threshold, fixed };
    Kind kind = Kind::gap;
    double rho = 0.1;  // threshold strategy: keep tau_n >= rho * tau_1
    int m = 1;         // fixed strategy

    static RankStrategy gap() { return {Kind::gap, 0.0, 0}; }
    static RankStrategy threshold(double rho) { return {Kind::threshold, rho, 0}; }
    static RankStrategy fixed(int m) { return {Kind::fixed, 0.0, m}; }
};

/// Signal-subspace rank. Gap strategy: argmax_n (tau_n - tau_{n+1})/tau_{n+1}
/// over n <= N/2; threshold: count of tau_n >= rho tau_1; fixed: clamp to [1,N].
/// Throws NumericalError when the spectrum carries no signal.
int select_rank(const SvdFactors& factors, const RankStrategy& strategy);

}  // namespace smig
