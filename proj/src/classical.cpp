#include "qembed/classical.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

namespace qembed {

namespace {

void require_finite(const Mat& m, const char* name)
{
    if (!m.allFinite())
        throw ParameterError(std::string("ClassicalSystem: ") + name + " has non-finite entries");
}

} // namespace

ClassicalSystem::ClassicalSystem(Mat a, Mat b, Mat c, Mat d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d))
{
    const Eigen::Index nn = A.rows();
    if (A.cols() != nn || nn < 1)
        throw DimensionError("ClassicalSystem: A must be square and nonempty");
    if (B.rows() != nn || B.cols() < 1)
        throw DimensionError("ClassicalSystem: B must be n x n_v1 with n_v1 >= 1");
    if (C.cols() != nn || C.rows() < 1)
        throw DimensionError("ClassicalSystem: C must be n_y x n with n_y >= 1");
    if (D.rows() != C.rows() || D.cols() < 1)
        throw DimensionError("ClassicalSystem: D must be n_y x n_v2 with n_v2 >= 1");
    require_finite(A, "A");
    require_finite(B, "B");
    require_finite(C, "C");
    require_finite(D, "D");
}

ValidationReport validate(const ClassicalSystem& sys)
{
    ValidationReport report;

    report.abscissa = spectral_abscissa(sys.A);
    report.hurwitz = report.abscissa < kHurwitzMargin;

    // PBH test for stabilizability of (-A, B): rank [lambda I + A, B] = n for
    // every eigenvalue lambda of -A with Re lambda >= 0.
    report.stabilizable = true;
    const Eigen::Index n = sys.n();
    const CVec evals = eigenvalues(-sys.A);
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        const Complex lambda = evals(i);
        if (lambda.real() < 0.0)
            continue;
        CMat pencil(n, n + sys.n_v1());
        pencil << lambda * CMat::Identity(n, n) + sys.A.cast<Complex>(), sys.B.cast<Complex>();
        Eigen::JacobiSVD<CMat> svd(pencil);
        const auto& sv = svd.singularValues();
        const double tol = static_cast<double>(std::max(pencil.rows(), pencil.cols())) *
                           (sv.size() ? sv(0) : 0.0) * 1e-12;
        Eigen::Index rank = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            if (sv(k) > tol)
                ++rank;
        if (rank < n) {
            report.stabilizable = false;
            report.failing_eigenvalue = lambda;
            break;
        }
    }

    Eigen::JacobiSVD<Mat> dsvd(sys.D);
    report.d_singular_values = dsvd.singularValues();
    report.d_full_row_rank = numerical_rank(sys.D) == sys.n_y();

    return report;
}

CMat classical_transfer(const ClassicalSystem& sys, Complex s)
{
    const Eigen::Index n = sys.n();
    CMat resolvent_arg = s * CMat::Identity(n, n) - sys.A.cast<Complex>();
    Eigen::PartialPivLU<CMat> lu(resolvent_arg);
    const double pivot_min = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (pivot_min < 1e-12 * (1.0 + std::abs(s)) * (1.0 + max_abs(sys.A)))
        throw PoleError("classical_transfer: s is (numerically) an eigenvalue of A");

    CMat out(sys.n_y(), sys.n_v1() + sys.n_v2());
    out.leftCols(sys.n_v1()) = sys.C.cast<Complex>() * lu.solve(sys.B.cast<Complex>());
    out.rightCols(sys.n_v2()) = sys.D.cast<Complex>();
    return out;
}

Mat classical_steady_covariance(const ClassicalSystem& sys)
{
    return solve_lyapunov(sys.A, sys.B * sys.B.transpose());
}

} // namespace qembed
