#include "stablegft/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stablegft/dense_kernels.hpp"
#include "stablegft/errors.hpp"

namespace stablegft::spectral {

SpectralBasis::SpectralBasis(ComplexMatrix F, ComplexVector Lambda, const SparseShift& A)
    : F_(std::move(F)), Lambda_(std::move(Lambda)) {
    if (F_.rows() != F_.cols() || F_.rows() != A.n() || Lambda_.size() != A.n()) {
        throw InvalidArgumentError("SpectralBasis: shapes do not conform (n = " +
                                   std::to_string(A.n()) + ", F " + std::to_string(F_.rows()) +
                                   "x" + std::to_string(F_.cols()) + ", Lambda " +
                                   std::to_string(Lambda_.size()) + ")");
    }
    F_inv_ = invert(F_);
    const ComplexMatrix I = ComplexMatrix::Identity(F_.rows(), F_.cols());
    inverse_error_budget_ = std::max((F_ * F_inv_ - I).norm(), (F_inv_ * F_ - I).norm());
    lambda_max_mag_ = Lambda_.size() == 0 ? 0.0 : Lambda_.cwiseAbs().maxCoeff();
    if (lambda_max_mag_ > 0.0) {
        tv_order_ = order_by_tv(*this, A);
    }
}

ComplexVector gft(const SpectralBasis& basis, const ComplexVector& s) {
    if (s.size() != basis.n()) {
        throw InvalidArgumentError("gft: expected signal of length " +
                                   std::to_string(basis.n()) + ", got " +
                                   std::to_string(s.size()));
    }
    return basis.F_inv() * s;
}

ComplexVector gft_inverse(const SpectralBasis& basis, const ComplexVector& s_hat) {
    if (s_hat.size() != basis.n()) {
        throw InvalidArgumentError("gft_inverse: expected coefficients of length " +
                                   std::to_string(basis.n()) + ", got " +
                                   std::to_string(s_hat.size()));
    }
    return basis.F() * s_hat;
}

double total_variation(const SpectralBasis& basis, const SparseShift& A,
                       const ComplexVector& f) {
    if (basis.lambda_max_mag() == 0.0) {
        throw InvalidArgumentError(
            "total_variation: spectrum is all zeros, normalization undefined");
    }
    if (f.size() != A.n()) {
        throw InvalidArgumentError("total_variation: expected vector of length " +
                                   std::to_string(A.n()) + ", got " + std::to_string(f.size()));
    }
    const ComplexVector shifted = (A.matrix() * f) / basis.lambda_max_mag();
    return (f - shifted).cwiseAbs().sum();
}

std::vector<Index> order_by_tv(const SpectralBasis& basis, const SparseShift& A) {
    const Index n = basis.n();
    std::vector<double> tv(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        tv[static_cast<std::size_t>(i)] = total_variation(basis, A, basis.F().col(i));
    }
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return tv[static_cast<std::size_t>(a)] < tv[static_cast<std::size_t>(b)];
    });
    return order;
}

}  // namespace stablegft::spectral
