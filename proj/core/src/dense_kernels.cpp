#include "stablegft/dense_kernels.hpp"

#include <limits>
#include <string>

#include <Eigen/Dense>

#include "stablegft/errors.hpp"

namespace stablegft {

namespace {

void require_finite(const ComplexMatrix& M, const char* who) {
    if (!M.allFinite()) {
        throw InvalidArgumentError(std::string(who) + ": input contains NaN or Inf");
    }
}

}  // namespace

double frobenius(const ComplexMatrix& M) {
    require_finite(M, "frobenius");
    return M.norm();
}

RealVector singular_values(const ComplexMatrix& M) {
    require_finite(M, "singular_values");
#ifdef EIGEN_USE_LAPACKE
    // Routed to zgesvd; fast at every size we use.
    Eigen::JacobiSVD<ComplexMatrix> svd(M);
    return svd.singularValues();
#else
    if (M.rows() < 64 && M.cols() < 64) {
        Eigen::JacobiSVD<ComplexMatrix> svd(M);
        return svd.singularValues();
    }
    Eigen::BDCSVD<ComplexMatrix> svd(M);
    return svd.singularValues();
#endif
}

double spectral_norm(const ComplexMatrix& M) {
    return singular_values(M)(0);
}

SingularExtremes singular_extremes(const ComplexMatrix& M) {
    RealVector sv = singular_values(M);
    return {sv(sv.size() - 1), sv(0)};
}

DenseEigen dense_eigendecompose(const ComplexMatrix& A) {
    if (A.rows() != A.cols()) {
        throw InvalidArgumentError("dense_eigendecompose: matrix must be square, got " +
                                   std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
    }
    require_finite(A, "dense_eigendecompose");
    const Index n = A.rows();
    DenseEigen out;
    out.V.resize(n, n);
    out.lambda.resize(n);
    if (n == 0) {
        return out;
    }
#ifdef EIGEN_USE_LAPACKE
    // zgeev's eigenvector back-substitution rescales as it goes, so heavily
    // repeated eigenvalues collapse sigma_min instead of overflowing.
    ComplexMatrix work = A;
    const lapack_int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', 'V', static_cast<lapack_int>(n),
        reinterpret_cast<lapack_complex_double*>(work.data()), static_cast<lapack_int>(n),
        reinterpret_cast<lapack_complex_double*>(out.lambda.data()), nullptr, 1,
        reinterpret_cast<lapack_complex_double*>(out.V.data()), static_cast<lapack_int>(n));
    if (info != 0) {
        throw ConvergenceError("dense_eigendecompose: QR iteration failed to converge",
                               static_cast<std::int64_t>(info));
    }
#else
    // Eigen's eigenvector extraction does not rescale its triangular solve
    // and can overflow to NaN on defective inputs; kept only as a fallback.
    Eigen::ComplexEigenSolver<ComplexMatrix> eig(A, true);
    if (eig.info() != Eigen::Success) {
        throw ConvergenceError("dense_eigendecompose: QR iteration failed to converge", 0);
    }
    out.V = eig.eigenvectors();
    out.lambda = eig.eigenvalues();
#endif
    return out;
}

ComplexMatrix invert(const ComplexMatrix& M) {
    if (M.rows() != M.cols()) {
        throw InvalidArgumentError("invert: matrix must be square, got " +
                                   std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
    }
    require_finite(M, "invert");

    Eigen::PartialPivLU<ComplexMatrix> lu(M);
    const auto diag = lu.matrixLU().diagonal();
    const double max_pivot = diag.cwiseAbs().maxCoeff();
    const double min_pivot = diag.cwiseAbs().minCoeff();
    const double threshold =
        static_cast<double>(M.rows()) * std::numeric_limits<double>::epsilon() * max_pivot;
    if (min_pivot <= threshold) {
        throw SingularMatrixError("invert: matrix is numerically singular", min_pivot);
    }
    return lu.inverse();
}

}  // namespace stablegft
