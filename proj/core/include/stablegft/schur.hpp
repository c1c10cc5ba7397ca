#pragma once

#include "stablegft/sparse_shift.hpp"
#include "stablegft/types.hpp"

namespace stablegft {

/// Complex Schur decomposition A = U T U^H with U unitary and T upper
/// triangular whose diagonal lists the eigenvalues of A.
struct SchurPair {
    ComplexMatrix U;
    ComplexMatrix T;
    Index n;
};

/// Computes the complex Schur form of a dense square matrix.
///
/// Post-processing applied to the raw triangular factor:
///   - entries below the diagonal are stored as exact zeros;
///   - strictly upper entries with magnitude at most 4 * n * eps * ||A||_F are
///     snapped to exact zero. Such entries sit below the backward-error floor
///     of the QR iteration, so the snap stays within the reconstruction
///     tolerance while making normal inputs come out exactly diagonal (their
///     off-diagonal contraction is then a true no-op).
///
/// Throws ConvergenceError if the QR iteration fails to converge or the
/// computed U drifts from unitarity beyond n * unitarity_tol, and
/// InvalidArgumentError for non-square or non-finite input.
SchurPair schur(const ComplexMatrix& A, double unitarity_tol = 1e-12);

/// Convenience overload for sparse shifts.
SchurPair schur(const SparseShift& A, double unitarity_tol = 1e-12);

}  // namespace stablegft
