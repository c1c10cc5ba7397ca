#pragma once

#include "stablegft/sparse_shift.hpp"
#include "stablegft/types.hpp"

namespace stablegft {

/// Diagonally rescaled Schur pair (F(eps), T(eps)) with A = F(eps) T(eps) F(eps)^{-1}.
struct EpsilonSchur {
    ComplexMatrix F_eps;
    ComplexMatrix T_eps;
    double epsilon;
    double t;  ///< max strictly-upper magnitude of the raw Schur factor
};

/// Rescales the Schur form of A by the diagonal similarity D = diag(theta^0,
/// ..., theta^{n-1}) so the triangular factor's off-diagonal shrinks:
///
///   t = max_{j>i} |T_ij|;  theta = eps        when t <= 1,
///                          theta = eps / t    when t >  1;
///   F(eps) = U D,  T(eps) = D^{-1} T D  (entry (i,j) scaled by theta^{j-i}).
///
/// For eps <= 1 this guarantees |T(eps)_{ij}| <= eps for j > i at the price
/// sigma_min(F(eps)) <= eps^{n-1}: near-triangular diagonalizations exist for
/// every matrix, but only with arbitrarily ill-conditioned bases. The trade-off
/// is what motivates demanding sigma_min >= alpha in the iterative scheme.
///
/// Throws InvalidArgumentError for eps <= 0 and OverflowError, carrying the
/// offending power, when theta^k underflows below the smallest normal double
/// (the basis would silently lose a column).
EpsilonSchur epsilon_schur(const SparseShift& A, double epsilon);

/// Calibration helper: the epsilon to request so that the *accuracy*
/// ||A F - F Lambda||_F lands near eps_target, given that each of the
/// n(n-1)/2 off-diagonal entries is bounded by eps and the basis norm is
/// basis_norm (sqrt(n) is a safe value, since ||F(eps)||_F <= sqrt(n)).
double epsilon_for_target(double eps_target, double basis_norm, Index n);

}  // namespace stablegft
