#pragma once

#include "stablegft/types.hpp"

namespace stablegft {

/// Extreme singular values of a dense matrix.
struct SingularExtremes {
    double sigma_min;
    double sigma_max;
};

/// Frobenius norm. Input must be finite.
double frobenius(const ComplexMatrix& M);

/// Largest singular value (operator 2-norm).
double spectral_norm(const ComplexMatrix& M);

/// Smallest and largest singular values via a full SVD of M.
/// Throws InvalidArgumentError on non-finite input.
SingularExtremes singular_extremes(const ComplexMatrix& M);

/// All singular values of M in non-increasing order.
RealVector singular_values(const ComplexMatrix& M);

/// Inverse of a square matrix through a pivoted LU factorization.
/// Throws SingularMatrixError carrying the offending pivot magnitude when a
/// pivot falls below n * eps * max_pivot (numerically singular at working
/// precision), and InvalidArgumentError for non-square or non-finite input.
ComplexMatrix invert(const ComplexMatrix& M);

/// Right eigenpairs from the classical dense unsymmetric solver.
struct DenseEigen {
    ComplexMatrix V;      ///< unit-norm right eigenvectors, one per column
    ComplexVector lambda;
};

/// Eigendecomposition A V = V diag(lambda) by QR iteration with a scaled
/// back-substitution for the eigenvectors, so the result is always finite.
/// Defective inputs produce nearly dependent columns instead of an error;
/// measuring how often that happens on random shifts is what this baseline
/// is for. Throws InvalidArgumentError for non-square or non-finite input
/// and ConvergenceError if the QR iteration stalls.
DenseEigen dense_eigendecompose(const ComplexMatrix& A);

}  // namespace stablegft
