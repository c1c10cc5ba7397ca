#pragma once

#include <cstdint>
#include <vector>

#include "stablegft/sylvester.hpp"
#include "stablegft/types.hpp"

namespace stablegft {

/// Stopping parameters for the bidiagonalization solver.
struct LsqrSettings {
    std::int64_t max_iters = 100;
    double atol = 1e-10;
    double btol = 1e-10;
    double conlim = 1e12;
};

enum class LsqrTermination {
    zero_rhs,             ///< b = 0, so x = 0 without any iterations
    residual_tol,         ///< ||K x - b|| <= btol ||b|| + atol ||K|| ||x||
    normal_equations_tol, ///< ||K^H r|| <= atol ||K|| ||r|| (least-squares point)
    condition_limit,      ///< condition estimate exceeded conlim
    max_iters_reached     ///< iteration budget exhausted (not an error)
};

struct LsqrStats {
    std::int64_t iterations = 0;
    LsqrTermination termination = LsqrTermination::zero_rhs;
    double residual = 0.0;            ///< true final residual ||K x - b||, recomputed
    double residual_estimate = 0.0;   ///< recurrence estimate at exit (phibar)
    double normal_residual = 0.0;     ///< estimate of ||K^H (b - K x)|| at exit
    double operator_norm = 0.0;       ///< accumulated Frobenius-norm estimate of K
    double condition = 0.0;           ///< condition estimate of K
    /// Estimated residual after each iteration, starting at ||b||. The
    /// recurrence makes this sequence non-increasing.
    std::vector<double> residual_history;
};

struct LsqrResult {
    ComplexVector x;
    LsqrStats stats;
};

/// Golub-Kahan bidiagonalization least-squares solve of K x ~ b for the
/// matrix-free Sylvester operator.
///
/// Starting from x = 0, every iterate lies in the Krylov space generated from
/// K^H b, which is contained in the row space of K; for consistent systems the
/// limit is therefore the minimum-norm solution. This is exactly what the
/// basis-update step needs: the right-hand side vec(F T - A F) is consistent
/// by construction (the correction x = -vec(F) always solves it), and the
/// minimum-norm correction realizes the closest feasible basis.
///
/// Throws InvalidArgumentError on invalid settings or a length mismatch.
LsqrResult lsqr_min_norm(const SylvesterOperator& op, const ComplexVector& b,
                         const LsqrSettings& settings = {});

}  // namespace stablegft
