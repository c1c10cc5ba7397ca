#include "stablegft/schur.hpp"

#include <limits>
#include <string>

#include <Eigen/Dense>

#include "stablegft/errors.hpp"

namespace stablegft {

SchurPair schur(const ComplexMatrix& A, double unitarity_tol) {
    const Index n = A.rows();
    if (n != A.cols()) {
        throw InvalidArgumentError("schur: matrix must be square, got " +
                                   std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
    }
    if (!A.allFinite()) {
        throw InvalidArgumentError("schur: input contains NaN or Inf");
    }

    Eigen::ComplexSchur<ComplexMatrix> decomposition(A, /*computeU=*/true);
    if (decomposition.info() != Eigen::Success) {
        throw ConvergenceError("schur: QR iteration did not converge",
                               Eigen::ComplexSchur<ComplexMatrix>::m_maxIterationsPerRow * n);
    }

    SchurPair pair{decomposition.matrixU(), decomposition.matrixT(), n};

    const double snap =
        4.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon() * A.norm();
    for (Index j = 0; j < n; ++j) {
        for (Index i = 0; i < n; ++i) {
            if (i > j) {
                pair.T(i, j) = Complex(0.0, 0.0);
            } else if (i < j && std::abs(pair.T(i, j)) <= snap) {
                pair.T(i, j) = Complex(0.0, 0.0);
            }
        }
    }

    const double unitarity =
        (pair.U.adjoint() * pair.U - ComplexMatrix::Identity(n, n)).norm();
    if (unitarity > static_cast<double>(n) * unitarity_tol) {
        throw ConvergenceError("schur: U lost unitarity (||U^H U - I||_F = " +
                                   std::to_string(unitarity) + ")",
                               0);
    }
    return pair;
}

SchurPair schur(const SparseShift& A, double unitarity_tol) {
    return schur(A.dense(), unitarity_tol);
}

}  // namespace stablegft
