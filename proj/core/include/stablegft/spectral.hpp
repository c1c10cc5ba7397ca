#pragma once

#include <vector>

#include "stablegft/sparse_shift.hpp"
#include "stablegft/types.hpp"

namespace stablegft::spectral {

/// A computed basis packaged for signal analysis: caches F^{-1} (the analysis
/// operator, computed once through a pivoted factorization since applying the
/// transform is the hot path) and the total-variation ordering of the
/// spectral components.
class SpectralBasis {
public:
    /// Throws SingularMatrixError when F cannot be inverted at working
    /// precision and InvalidArgumentError on shape mismatch. When every
    /// eigenvalue is zero (nilpotent or zero shift), the basis is still
    /// usable for analysis/synthesis but carries no TV ordering.
    SpectralBasis(ComplexMatrix F, ComplexVector Lambda, const SparseShift& A);

    Index n() const { return F_.rows(); }
    const ComplexMatrix& F() const { return F_; }
    const ComplexVector& Lambda() const { return Lambda_; }
    const ComplexMatrix& F_inv() const { return F_inv_; }

    /// max(||F F^-1 - I||_F, ||F^-1 F - I||_F) measured at construction.
    double inverse_error_budget() const { return inverse_error_budget_; }

    /// Largest eigenvalue modulus; zero only when the spectrum is all zeros.
    double lambda_max_mag() const { return lambda_max_mag_; }

    /// Column order of non-decreasing total variation (ties broken by
    /// ascending column index); empty when lambda_max_mag() is zero.
    const std::vector<Index>& tv_order() const { return tv_order_; }

private:
    ComplexMatrix F_;
    ComplexVector Lambda_;
    ComplexMatrix F_inv_;
    double inverse_error_budget_;
    double lambda_max_mag_;
    std::vector<Index> tv_order_;
};

/// Analysis: spectral coefficients F^{-1} s of a signal.
ComplexVector gft(const SpectralBasis& basis, const ComplexVector& s);

/// Synthesis: signal F s_hat from spectral coefficients.
ComplexVector gft_inverse(const SpectralBasis& basis, const ComplexVector& s_hat);

/// Total variation ||f - (A / |lambda_max|) f||_1 (entrywise complex modulus),
/// the increasing frequency measure. Throws InvalidArgumentError when the
/// spectrum is all zeros (the normalization is undefined).
double total_variation(const SpectralBasis& basis, const SparseShift& A, const ComplexVector& f);

/// Permutation of 0..n-1 sorting basis columns by non-decreasing total
/// variation, ties broken by ascending column index.
std::vector<Index> order_by_tv(const SpectralBasis& basis, const SparseShift& A);

}  // namespace stablegft::spectral
