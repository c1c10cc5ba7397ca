#include "stablegft/sylvester.hpp"

#include <string>

#include "stablegft/errors.hpp"

namespace stablegft {

SylvesterOperator::SylvesterOperator(const SparseShift& A, ComplexMatrix T)
    : n_(A.n()), A_(A), T_(std::move(T)) {
    if (T_.rows() != n_ || T_.cols() != n_) {
        throw InvalidArgumentError("SylvesterOperator: T is " + std::to_string(T_.rows()) +
                                   "x" + std::to_string(T_.cols()) + " but A has n = " +
                                   std::to_string(n_));
    }
    for (Index j = 0; j < n_; ++j) {
        for (Index i = j + 1; i < n_; ++i) {
            if (T_(i, j) != Complex(0.0, 0.0)) {
                throw InvalidArgumentError(
                    "SylvesterOperator: T must be upper triangular, found nonzero at (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
    A_adjoint_ = A_.matrix().adjoint();
    A_adjoint_.makeCompressed();
    T_adjoint_ = T_.adjoint();
}

ComplexMatrix SylvesterOperator::apply_matrix(const ComplexMatrix& X) const {
    return A_.matrix() * X - X * T_.triangularView<Eigen::Upper>();
}

ComplexMatrix SylvesterOperator::apply_adjoint_matrix(const ComplexMatrix& X) const {
    return A_adjoint_ * X - X * T_adjoint_.triangularView<Eigen::Lower>();
}

ComplexVector SylvesterOperator::apply(const ComplexVector& x) const {
    if (x.size() != size()) {
        throw InvalidArgumentError("SylvesterOperator::apply: expected length " +
                                   std::to_string(size()) + ", got " + std::to_string(x.size()));
    }
    return vec(apply_matrix(unvec(x, n_, n_)));
}

ComplexVector SylvesterOperator::apply_adjoint(const ComplexVector& x) const {
    if (x.size() != size()) {
        throw InvalidArgumentError("SylvesterOperator::apply_adjoint: expected length " +
                                   std::to_string(size()) + ", got " + std::to_string(x.size()));
    }
    return vec(apply_adjoint_matrix(unvec(x, n_, n_)));
}

ComplexMatrix SylvesterOperator::dense_matrix() const {
    if (n_ > 64) {
        throw InvalidArgumentError(
            "SylvesterOperator::dense_matrix: cross-check path is limited to n <= 64, got n = " +
            std::to_string(n_));
    }
    const Index N = size();
    ComplexMatrix K = ComplexMatrix::Zero(N, N);
    const ComplexMatrix A = A_.dense();
    for (Index j = 0; j < n_; ++j) {
        K.block(j * n_, j * n_, n_, n_) += A;
        for (Index i = 0; i < n_; ++i) {
            K.block(j * n_, i * n_, n_, n_).diagonal().array() -= T_(i, j);
        }
    }
    return K;
}

}  // namespace stablegft
