#pragma once

#include "stablegft/sylvester.hpp"
#include "stablegft/types.hpp"

namespace stablegft {

struct DenseMinNormResult {
    ComplexVector x;
    double residual;  ///< true ||K x - b||, recomputed through the operator
    Index rank;       ///< numerical rank decided by the factorization
};

/// Exact minimum-norm least-squares solve of K x ~ b with K materialized
/// densely and factored by a complete orthogonal decomposition. Serves as the
/// independent cross-check path for the iterative solver and as the
/// exact-projection route required by the contraction-bound and
/// norm-monotonicity properties. Restricted to n <= 64 like dense_matrix().
///
/// rank_threshold is the relative column-pivot cutoff deciding the numerical
/// rank. The operator always has at least n structurally zero singular values
/// (A X = X T has solutions) and, away from pathologically clustered
/// eigenvalues, a clean gap above them, so any cutoff inside the gap yields
/// the exact projector.
DenseMinNormResult dense_min_norm_solve(const SylvesterOperator& op, const ComplexVector& b,
                                        double rank_threshold = 1e-10);

}  // namespace stablegft
