#include "qembed/foundation.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace qembed {

double max_abs(const Mat& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs(const CMat& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

CVec eigenvalues(const Mat& m)
{
    if (m.rows() != m.cols())
        throw DimensionError("eigenvalues: matrix must be square, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    if (m.rows() == 0)
        return CVec(0);
    Eigen::EigenSolver<Mat> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw Error("eigenvalues: QR iteration did not converge");
    return solver.eigenvalues();
}

double spectral_abscissa(const Mat& m)
{
    return eigenvalues(m).real().maxCoeff();
}

bool is_hurwitz(const Mat& m)
{
    return spectral_abscissa(m) < kHurwitzMargin;
}

double rank_threshold(const Mat& m, const Eigen::VectorXd& singular_values)
{
    const double sigma_max = singular_values.size() ? singular_values(0) : 0.0;
    return static_cast<double>(std::max(m.rows(), m.cols())) * sigma_max * 1e-12;
}

Eigen::Index numerical_rank(const Mat& m)
{
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& sv = svd.singularValues();
    const double tol = rank_threshold(m, sv);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol)
            ++r;
    return r;
}

Mat kernel_basis(const Mat& m)
{
    if (m.size() == 0)
        return Mat::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double tol = rank_threshold(m, sv);
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol)
            ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

Mat pseudoinverse(const Mat& m)
{
    if (m.size() == 0)
        return Mat(m.cols(), m.rows());
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double tol = rank_threshold(m, sv);
    Eigen::VectorXd inv_sv(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        inv_sv(i) = sv(i) > tol ? 1.0 / sv(i) : 0.0;
    return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().transpose();
}

namespace {

Mat kron(const Mat& a, const Mat& b)
{
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace

Mat solve_lyapunov(const Mat& a, const Mat& q)
{
    if (a.rows() != a.cols())
        throw DimensionError("solve_lyapunov: a must be square");
    if (q.rows() != a.rows() || q.cols() != a.cols())
        throw DimensionError("solve_lyapunov: q must match a");
    if (!is_hurwitz(a))
        throw StabilityError("solve_lyapunov: a is not Hurwitz (spectral abscissa " +
                             std::to_string(spectral_abscissa(a)) + ")");

    const Eigen::Index n = a.rows();
    const Mat id = Mat::Identity(n, n);
    // Vectorized form: (I (x) a + a (x) I) vec(X) = -vec(q), column-major vec.
    Mat lhs = kron(id, a) + kron(a, id);
    Vec rhs = -Eigen::Map<const Vec>(q.data(), q.size());
    Vec x = lhs.partialPivLu().solve(rhs);
    Mat sol = Eigen::Map<const Mat>(x.data(), n, n);
    return 0.5 * (sol + sol.transpose());
}

Mat solve_are(const Mat& a, const Mat& b, const Mat& q)
{
    const Eigen::Index n = a.rows();
    if (a.cols() != n)
        throw DimensionError("solve_are: a must be square");
    if (b.rows() != n)
        throw DimensionError("solve_are: b must have as many rows as a");
    if (q.rows() != n || q.cols() != n)
        throw DimensionError("solve_are: q must match a");

    Mat hamiltonian(2 * n, 2 * n);
    hamiltonian << a, -b * b.transpose(), -q, -a.transpose();

    Eigen::EigenSolver<Mat> solver(hamiltonian);
    if (solver.info() != Eigen::Success)
        throw Error("solve_are: eigen decomposition failed");

    const CVec evals = solver.eigenvalues();
    const CMat evecs = solver.eigenvectors();
    CMat basis(2 * n, n);
    Eigen::Index count = 0;
    for (Eigen::Index i = 0; i < 2 * n; ++i) {
        if (evals(i).real() < 0) {
            if (count == n)
                throw SynthesisError("solve_are: Hamiltonian has more than n stable eigenvalues");
            basis.col(count++) = evecs.col(i);
        }
    }
    if (count != n)
        throw SynthesisError("solve_are: pair is not stabilizable "
                             "(stable invariant subspace has dimension " +
                             std::to_string(count) + " < " + std::to_string(n) + ")");

    const CMat u1 = basis.topRows(n);
    const CMat u2 = basis.bottomRows(n);
    // X = u2 u1^{-1}; solve u1^T X^T = u2^T.
    CMat xc = u1.transpose().colPivHouseholderQr().solve(u2.transpose()).transpose();
    Mat x = 0.5 * (xc.real() + xc.real().transpose());

    if (!is_hurwitz(a - b * b.transpose() * x))
        throw SynthesisError("solve_are: computed solution is not stabilizing");
    return x;
}

OdeTrajectory integrate_ode(const std::function<Vec(double, const Vec&)>& f,
                            const Vec& x0, double t0, double t1, double step)
{
    if (step <= 0.0)
        throw ParameterError("integrate_ode: step must be positive");
    if (t1 < t0)
        throw ParameterError("integrate_ode: t1 must be >= t0");

    OdeTrajectory traj;
    traj.times.push_back(t0);
    traj.states.push_back(x0);

    double t = t0;
    Vec x = x0;
    while (t < t1 - 1e-12 * (1.0 + std::abs(t1))) {
        const double h = std::min(step, t1 - t);
        const Vec k1 = f(t, x);
        const Vec k2 = f(t + 0.5 * h, x + 0.5 * h * k1);
        const Vec k3 = f(t + 0.5 * h, x + 0.5 * h * k2);
        const Vec k4 = f(t + h, x + h * k3);
        x = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
        traj.times.push_back(t);
        traj.states.push_back(x);
    }
    return traj;
}

} // namespace qembed
