#pragma once

#include <Eigen/SparseCore>

#include "stablegft/sparse_shift.hpp"
#include "stablegft/types.hpp"

namespace stablegft {

/// Matrix-free representation of the Kronecker operator
///
///     K = I (x) A  -  T^T (x) I,     K vec(X) = vec(A X - X T),
///
/// the linear map whose null space is the feasible set {X : A X = X T} of the
/// basis-update step. The n^2-by-n^2 matrix is never materialized on the
/// production path; one application costs one sparse product A*X plus one
/// triangular product X*T. The adjoint applies K^H vec(X) = vec(A^H X - X T^H).
class SylvesterOperator {
public:
    /// T must be square, upper triangular (exact zeros below the diagonal)
    /// and of the same dimension as A; throws InvalidArgumentError otherwise.
    SylvesterOperator(const SparseShift& A, ComplexMatrix T);

    Index n() const { return n_; }

    /// Length of operand vectors: n^2.
    Index size() const { return n_ * n_; }

    /// K vec(X) for x = vec(X); throws InvalidArgumentError on length mismatch.
    ComplexVector apply(const ComplexVector& x) const;

    /// K^H vec(X); same contract as apply.
    ComplexVector apply_adjoint(const ComplexVector& x) const;

    /// Matrix-level forms of the two applications.
    ComplexMatrix apply_matrix(const ComplexMatrix& X) const;
    ComplexMatrix apply_adjoint_matrix(const ComplexMatrix& X) const;

    /// Materializes K densely for the exact-solve cross-check path.
    /// Restricted to n <= 64 (the matrix has n^4 entries).
    ComplexMatrix dense_matrix() const;

    const SparseShift& shift() const { return A_; }
    const ComplexMatrix& triangular() const { return T_; }

private:
    Index n_;
    SparseShift A_;
    Eigen::SparseMatrix<Complex> A_adjoint_;
    ComplexMatrix T_;
    ComplexMatrix T_adjoint_;
};

/// Free-function spellings of the two applications.
inline ComplexVector apply_operator(const SylvesterOperator& op, const ComplexVector& x) {
    return op.apply(x);
}
inline ComplexVector apply_adjoint(const SylvesterOperator& op, const ComplexVector& x) {
    return op.apply_adjoint(x);
}

}  // namespace stablegft
