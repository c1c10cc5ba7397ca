#include "stablegft/dense_min_norm.hpp"

#include <string>

#include <Eigen/Dense>

#include "stablegft/errors.hpp"

namespace stablegft {

DenseMinNormResult dense_min_norm_solve(const SylvesterOperator& op, const ComplexVector& b,
                                        double rank_threshold) {
    if (b.size() != op.size()) {
        throw InvalidArgumentError("dense_min_norm_solve: expected right-hand side of length " +
                                   std::to_string(op.size()) + ", got " +
                                   std::to_string(b.size()));
    }
    if (!(rank_threshold > 0.0 && rank_threshold < 1.0)) {
        throw InvalidArgumentError("dense_min_norm_solve: rank_threshold must lie in (0, 1)");
    }

    const ComplexMatrix K = op.dense_matrix();
    Eigen::CompleteOrthogonalDecomposition<ComplexMatrix> cod;
    cod.setThreshold(rank_threshold);
    cod.compute(K);

    DenseMinNormResult result;
    result.x = cod.solve(b);
    result.rank = cod.rank();
    result.residual = (op.apply(result.x) - b).norm();
    return result;
}

}  // namespace stablegft
