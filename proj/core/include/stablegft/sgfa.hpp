#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "stablegft/lsqr.hpp"
#include "stablegft/schur.hpp"
#include "stablegft/sparse_shift.hpp"
#include "stablegft/types.hpp"

namespace stablegft {

/// Which quantity the stability test compares against the tolerance alpha:
/// the smallest singular value of the iterate against alpha itself, or the
/// condition number of the iterate against 1/alpha.
enum class TerminationMetric { sigma_min_vs_alpha, condition_vs_inv_alpha };

/// Inner solver for the basis-update step. The matrix-free route is the
/// production path; the dense route factors the materialized Kronecker
/// operator exactly and is the cross-check / exact-projection path (n <= 64).
enum class InnerSolver { matrix_free_lsqr, dense_exact };

enum class SgfaTermination {
    stability_floor_hit,    ///< an iterate failed the stability test; the previous one is returned
    offdiag_converged,      ///< ||T_k - Lambda||_F fell below offdiag_tol * ||T_0 - Lambda||_F
    max_outer_reached,      ///< outer-iteration budget exhausted
    initial_schur_returned  ///< the very first update already failed; the Schur basis is returned
};

struct SgfaConfig {
    double alpha = 1e-6;         ///< stability tolerance, in (0, 1]
    double beta = 0.5;           ///< contraction factor, in (0, 1)
    std::int64_t max_outer = 500;
    /// Declare success when the off-diagonal mass of T_k has shrunk to this
    /// fraction of its initial value. The stability test alone never fires for
    /// well-conditioned diagonalizable inputs (sigma_min stays bounded away
    /// from zero while the objective keeps falling), so this is the natural
    /// success exit.
    double offdiag_tol = 1e-12;
    LsqrSettings lsqr{};
    TerminationMetric termination_metric = TerminationMetric::sigma_min_vs_alpha;
    InnerSolver inner_solver = InnerSolver::matrix_free_lsqr;
    double dense_rank_threshold = 1e-10;  ///< pivot cutoff for the dense route
    bool track_history = true;            ///< store per-iteration records in the result
};

/// One row of the convergence history. k = 0 describes the Schur initializer.
struct IterationRecord {
    std::int64_t k = 0;
    double accuracy = 0.0;        ///< ||A F_k - F_k Lambda||_F
    double basis_norm = 0.0;      ///< ||F_k||_F
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double offdiag = 0.0;         ///< ||T_k - Lambda||_F
    double feasibility = 0.0;     ///< ||A F_k - F_k T_k||_F
    double inner_residual = 0.0;  ///< reported final residual of the update solve
    double solve_seconds = 0.0;   ///< wall-clock time of the update solve
    Index dense_rank = -1;        ///< numerical rank on the dense route, -1 otherwise
    LsqrStats lsqr;               ///< populated on the matrix-free route
};

struct SgfaResult {
    ComplexMatrix F;
    ComplexVector Lambda;            ///< diagonal of T_0, fixed for the whole run
    std::int64_t iterations_run = 0; ///< number of basis-update solves executed
    SgfaTermination termination = SgfaTermination::max_outer_reached;
    std::vector<IterationRecord> history;
};

/// Called after every computed iterate (including k = 0 and including a final
/// iterate that fails the stability test and is discarded from the result).
/// Receives the record plus the iterate's basis and triangular factor.
using SgfaObserver =
    std::function<void(const IterationRecord&, const ComplexMatrix& F, const ComplexMatrix& T)>;

/// Scales the strictly upper triangle of T by beta, leaving the diagonal
/// untouched. Throws InvalidArgumentError if T is not upper triangular.
ComplexMatrix contract(const ComplexMatrix& T, double beta);

/// Runs the stable-basis iteration on the shift A:
///
///   1. F_0, T_0 from the complex Schur form of A; Lambda = diag(T_0).
///   2. T_{k+1} = contract(T_k, beta).
///   3. F_{k+1} = F_k + unvec(x) where x solves min ||x|| subject to
///      K x = vec(F_k T_{k+1} - A F_k) over the Sylvester operator
///      K = I(x)A - T_{k+1}^T(x)I, i.e. the minimum-distance projection of
///      F_k onto {F : A F = F T_{k+1}}.
///   4. Stop when an iterate fails the stability test (the last passing
///      iterate is returned), when the off-diagonal mass has converged, or
///      when max_outer is exhausted.
///
/// The returned basis always satisfies the stability test except when
/// termination = initial_schur_returned (the unitary Schur basis is returned,
/// which satisfies it trivially for the sigma_min metric).
///
/// Throws InvalidArgumentError on invalid config and ConvergenceError,
/// carrying the iteration index, if an iterate picks up NaN or Inf.
SgfaResult sgfa_run(const SparseShift& A, const SgfaConfig& cfg, const SgfaObserver& observer = {});

/// Same iteration on A^H: the resulting columns approximate the left
/// eigenvectors of A, and the returned eigenvalues are those of A^H (the
/// conjugates of A's spectrum, in the Schur order of A^H itself).
SgfaResult sgfa_run_left(const SparseShift& A, const SgfaConfig& cfg,
                         const SgfaObserver& observer = {});

}  // namespace stablegft
