#pragma once

#include <optional>

#include "qembed/foundation.hpp"

namespace qembed {

/// Classical linear stochastic system
///   d xi = A xi dt + B dv1,   dy = C xi dt + D dv2,
/// with v1, v2 independent standard Wiener processes.
struct ClassicalSystem {
    Mat A; ///< n x n drift
    Mat B; ///< n x n_v1 process-noise gain
    Mat C; ///< n_y x n output map
    Mat D; ///< n_y x n_v2 output-noise gain

    ClassicalSystem(Mat a, Mat b, Mat c, Mat d);

    Eigen::Index n() const { return A.rows(); }
    Eigen::Index n_v1() const { return B.cols(); }
    Eigen::Index n_v2() const { return D.cols(); }
    Eigen::Index n_y() const { return C.rows(); }
};

/// Outcome of the three admissibility checks: A Hurwitz, (-A, B) stabilizable,
/// D full row rank.
struct ValidationReport {
    bool hurwitz = false;
    double abscissa = 0.0;
    bool stabilizable = false;
    std::optional<Complex> failing_eigenvalue; ///< PBH witness when not stabilizable
    bool d_full_row_rank = false;
    Vec d_singular_values;

    bool pass() const { return hurwitz && stabilizable && d_full_row_rank; }
};

ValidationReport validate(const ClassicalSystem& sys);

/// [C (sI - A)^{-1} B, D], input channels ordered [v1; v2].
CMat classical_transfer(const ClassicalSystem& sys, Complex s);

/// Steady-state covariance: solution of A S + S A^T + B B^T = 0.
Mat classical_steady_covariance(const ClassicalSystem& sys);

} // namespace qembed
