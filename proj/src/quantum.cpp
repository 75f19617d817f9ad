#include "qembed/quantum.hpp"

#include <Eigen/LU>

namespace qembed {

QuantumSystem::QuantumSystem(Mat a, Mat b, Mat c, Mat d)
    : Atil(std::move(a)), Btil(std::move(b)), Ctil(std::move(c)), Dtil(std::move(d))
{
    const Eigen::Index two_n = Atil.rows();
    if (Atil.cols() != two_n || two_n < 2 || two_n % 2 != 0)
        throw DimensionError("QuantumSystem: Atil must be square with even size >= 2");
    if (Btil.rows() != two_n)
        throw DimensionError("QuantumSystem: Btil row count must match Atil");
    if (Btil.cols() < 2 || Btil.cols() % 2 != 0)
        throw DimensionError("QuantumSystem: n_w must be even and >= 2");
    if (Ctil.cols() != two_n)
        throw DimensionError("QuantumSystem: Ctil column count must match Atil");
    if (Ctil.rows() % 2 != 0)
        throw DimensionError("QuantumSystem: n_z must be even");
    if (Dtil.rows() != Ctil.rows() || Dtil.cols() != Btil.cols())
        throw DimensionError("QuantumSystem: Dtil must be n_z x n_w");
    if (Ctil.rows() > Btil.cols())
        throw DimensionError("QuantumSystem: n_z <= n_w required");
    if (!Atil.allFinite() || !Btil.allFinite() || !Ctil.allFinite() || !Dtil.allFinite())
        throw ParameterError("QuantumSystem: non-finite entries");
}

Mat symplectic_J(Eigen::Index n)
{
    Mat j = Mat::Zero(2 * n, 2 * n);
    j.topRightCorner(n, n) = Mat::Identity(n, n);
    j.bottomLeftCorner(n, n) = -Mat::Identity(n, n);
    return j;
}

CMat ito_F(Eigen::Index n_w)
{
    if (n_w % 2 != 0)
        throw DimensionError("ito_F: n_w must be even");
    return CMat::Identity(n_w, n_w) +
           Complex(0.0, 1.0) * symplectic_J(n_w / 2).cast<Complex>();
}

PRReport check_physical_realizability(const QuantumSystem& q, double tol)
{
    const Mat jn = symplectic_J(q.n());
    const Mat jw = symplectic_J(q.n_w() / 2);
    const Mat jz = symplectic_J(q.n_z() / 2);

    PRReport report;
    report.tolerance = tol;
    report.residual1 = max_abs(Mat(q.Atil * jn + jn * q.Atil.transpose() +
                                   q.Btil * jw * q.Btil.transpose()));
    report.residual2 = max_abs(Mat(q.Btil * jw * q.Dtil.transpose() +
                                   jn * q.Ctil.transpose()));
    report.residual3 = max_abs(Mat(q.Dtil * jw * q.Dtil.transpose() - jz));
    report.pass = report.residual1 < tol && report.residual2 < tol && report.residual3 < tol;
    return report;
}

CMat quantum_transfer(const QuantumSystem& q, Complex s)
{
    const Eigen::Index two_n = 2 * q.n();
    CMat resolvent_arg = s * CMat::Identity(two_n, two_n) - q.Atil.cast<Complex>();
    Eigen::PartialPivLU<CMat> lu(resolvent_arg);
    const double pivot_min = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (pivot_min < 1e-12 * (1.0 + std::abs(s)) * (1.0 + max_abs(q.Atil)))
        throw PoleError("quantum_transfer: s is (numerically) an eigenvalue of Atil");
    return q.Ctil.cast<Complex>() * lu.solve(q.Btil.cast<Complex>()) + q.Dtil.cast<Complex>();
}

double commutation_flow_residual(const QuantumSystem& q)
{
    const Mat jn = symplectic_J(q.n());
    const Mat jw = symplectic_J(q.n_w() / 2);
    return max_abs(Mat(q.Atil * jn + jn * q.Atil.transpose() +
                       q.Btil * jw * q.Btil.transpose()));
}

} // namespace qembed
