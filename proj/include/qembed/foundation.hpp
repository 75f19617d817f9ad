#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

#include "qembed/errors.hpp"

namespace qembed {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// A matrix is treated as Hurwitz when its spectral abscissa is below this
/// margin; marginal systems are deterministically rejected.
inline constexpr double kHurwitzMargin = -1e-9;

/// Entrywise infinity norm (max |entry|), the norm used for all residuals.
double max_abs(const Mat& m);
double max_abs(const CMat& m);

/// All eigenvalues (with multiplicity) of a square real matrix.
CVec eigenvalues(const Mat& m);

/// max over eigenvalues of the real part.
double spectral_abscissa(const Mat& m);

bool is_hurwitz(const Mat& m);

/// Threshold below which singular values count as zero:
/// max(rows, cols) * sigma_max * 1e-12.
double rank_threshold(const Mat& m, const Eigen::VectorXd& singular_values);

Eigen::Index numerical_rank(const Mat& m);

/// Orthonormal columns spanning ker(m); 2n x 0 result for full column rank.
Mat kernel_basis(const Mat& m);

/// Moore-Penrose pseudoinverse via SVD.
Mat pseudoinverse(const Mat& m);

/// Solves a*X + X*a^T + q = 0 for symmetric q and Hurwitz a.
/// Throws StabilityError when a is not Hurwitz.
Mat solve_lyapunov(const Mat& a, const Mat& q);

/// Stabilizing solution X of a^T X + X a - X b b^T X + q = 0 (q symmetric PSD),
/// computed from the stable invariant subspace of the Hamiltonian matrix.
/// The closed loop a - b b^T X is Hurwitz. Throws SynthesisError when (a, b)
/// is not stabilizable (no n-dimensional stable subspace).
Mat solve_are(const Mat& a, const Mat& b, const Mat& q);

struct OdeTrajectory {
    std::vector<double> times;
    std::vector<Vec> states;
};

/// Fixed-step RK4 integration of dx/dt = f(t, x) over [t0, t1].
/// The final step is shortened to land on t1 exactly.
OdeTrajectory integrate_ode(const std::function<Vec(double, const Vec&)>& f,
                            const Vec& x0, double t0, double t1, double step);

} // namespace qembed
