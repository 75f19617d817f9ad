#pragma once

#include "qembed/foundation.hpp"

namespace qembed {

/// Default residual tolerance for physical-realizability checks; the CLI can
/// override it through QEMBED_TOL.
inline constexpr double kDefaultTolerance = 1e-8;

/// Quadrature-form quantum linear stochastic system
///   dx = Atil x dt + Btil dw,   dz = Ctil x dt + Dtil dw,
/// with n oscillator modes stacked as x = [q-block; p-block], n_w input field
/// quadratures and n_z output field quadratures (both even, n_z <= n_w).
/// Conventions are canonical throughout: [q_j, p_k] = 2i delta_jk and
/// dw dw^T = (I + i J) dt.
struct QuantumSystem {
    Mat Atil; ///< 2n x 2n
    Mat Btil; ///< 2n x n_w
    Mat Ctil; ///< n_z x 2n
    Mat Dtil; ///< n_z x n_w

    QuantumSystem(Mat a, Mat b, Mat c, Mat d);

    Eigen::Index n() const { return Atil.rows() / 2; }
    Eigen::Index n_w() const { return Btil.cols(); }
    Eigen::Index n_z() const { return Ctil.rows(); }
};

/// Canonical symplectic form J_n = [[0, I],[-I, 0]] (2n x 2n).
Mat symplectic_J(Eigen::Index n);

/// Canonical Ito matrix F = I + i J_{n_w/2} for an even number of quadratures.
CMat ito_F(Eigen::Index n_w);

/// Residuals of the three physical-realizability constraints, in the
/// entrywise infinity norm.
struct PRReport {
    double residual1 = 0.0; ///< ||Atil J + J Atil^T + Btil J Btil^T||
    double residual2 = 0.0; ///< ||Btil J Dtil^T + J Ctil^T||
    double residual3 = 0.0; ///< ||Dtil J Dtil^T - J_{n_z/2}||
    double tolerance = kDefaultTolerance;
    bool pass = false;
};

PRReport check_physical_realizability(const QuantumSystem& q,
                                      double tol = kDefaultTolerance);

/// Ctil (sI - Atil)^{-1} Btil + Dtil.
CMat quantum_transfer(const QuantumSystem& q, Complex s);

/// ||Atil J + J Atil^T + Btil J Btil^T||: the generator of the flow of the
/// commutation matrix started at 2iJ. Zero exactly when PR condition 1 holds.
double commutation_flow_residual(const QuantumSystem& q);

} // namespace qembed
