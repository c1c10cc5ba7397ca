#include "stablegft/sgfa.hpp"

#include <chrono>
#include <string>
#include <utility>

#include "stablegft/dense_kernels.hpp"
#include "stablegft/dense_min_norm.hpp"
#include "stablegft/errors.hpp"
#include "stablegft/sylvester.hpp"

namespace stablegft {

namespace {

void validate(const SgfaConfig& cfg) {
    if (!(cfg.alpha > 0.0 && cfg.alpha <= 1.0)) {
        throw InvalidArgumentError("sgfa: alpha must lie in (0, 1], got " +
                                   std::to_string(cfg.alpha));
    }
    if (!(cfg.beta > 0.0 && cfg.beta < 1.0)) {
        throw InvalidArgumentError("sgfa: beta must lie in (0, 1), got " +
                                   std::to_string(cfg.beta));
    }
    if (cfg.max_outer < 1) {
        throw InvalidArgumentError("sgfa: max_outer must be at least 1, got " +
                                   std::to_string(cfg.max_outer));
    }
    if (!(cfg.offdiag_tol >= 0.0)) {
        throw InvalidArgumentError("sgfa: offdiag_tol must be nonnegative");
    }
}

bool passes_stability(const SgfaConfig& cfg, const SingularExtremes& extremes) {
    if (cfg.termination_metric == TerminationMetric::sigma_min_vs_alpha) {
        return extremes.sigma_min >= cfg.alpha;
    }
    // condition_vs_inv_alpha: kappa(F) <= 1/alpha, with singular F failing.
    if (extremes.sigma_min == 0.0) {
        return false;
    }
    return extremes.sigma_max / extremes.sigma_min <= 1.0 / cfg.alpha;
}

/// Fills the shared measurement fields of a history row from the iterate.
IterationRecord measure(std::int64_t k, const SparseShift& A, const ComplexMatrix& F,
                        const ComplexMatrix& T, const ComplexVector& Lambda) {
    IterationRecord rec;
    rec.k = k;
    const ComplexMatrix AF = A.matrix() * F;
    rec.accuracy = (AF - F * Lambda.asDiagonal()).norm();
    rec.feasibility = (AF - F * T.triangularView<Eigen::Upper>()).norm();
    rec.basis_norm = F.norm();
    const SingularExtremes extremes = singular_extremes(F);
    rec.sigma_min = extremes.sigma_min;
    rec.sigma_max = extremes.sigma_max;
    rec.offdiag = (T - ComplexMatrix(Lambda.asDiagonal())).norm();
    return rec;
}

}  // namespace

ComplexMatrix contract(const ComplexMatrix& T, double beta) {
    if (T.rows() != T.cols()) {
        throw InvalidArgumentError("contract: T must be square, got " +
                                   std::to_string(T.rows()) + "x" + std::to_string(T.cols()));
    }
    for (Index j = 0; j < T.cols(); ++j) {
        for (Index i = j + 1; i < T.rows(); ++i) {
            if (T(i, j) != Complex(0.0, 0.0)) {
                throw InvalidArgumentError(
                    "contract: T must be upper triangular, found nonzero at (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
    ComplexMatrix out = T;
    for (Index j = 1; j < T.cols(); ++j) {
        out.col(j).head(j) *= beta;
    }
    return out;
}

SgfaResult sgfa_run(const SparseShift& A, const SgfaConfig& cfg, const SgfaObserver& observer) {
    validate(cfg);
    const Index n = A.n();

    SgfaResult result;
    if (n == 1) {
        result.F = ComplexMatrix::Identity(1, 1);
        result.Lambda = A.dense().diagonal();
        result.termination = SgfaTermination::offdiag_converged;
        IterationRecord rec = measure(0, A, result.F, ComplexMatrix(result.Lambda.asDiagonal()),
                                      result.Lambda);
        if (observer) {
            observer(rec, result.F, ComplexMatrix(result.Lambda.asDiagonal()));
        }
        if (cfg.track_history) {
            result.history.push_back(std::move(rec));
        }
        return result;
    }

    const SchurPair pair = schur(A);
    result.Lambda = pair.T.diagonal();

    ComplexMatrix F = pair.U;
    ComplexMatrix T = pair.T;

    IterationRecord rec0 = measure(0, A, F, T, result.Lambda);
    const double offdiag_initial = rec0.offdiag;
    if (observer) {
        observer(rec0, F, T);
    }
    if (cfg.track_history) {
        result.history.push_back(std::move(rec0));
    }

    for (std::int64_t iter = 1; iter <= cfg.max_outer; ++iter) {
        const ComplexMatrix T_next = contract(T, cfg.beta);
        const SylvesterOperator op(A, T_next);
        const ComplexVector b =
            vec(F * T_next.triangularView<Eigen::Upper>() - A.matrix() * F);

        IterationRecord rec;
        const auto solve_start = std::chrono::steady_clock::now();
        ComplexVector x;
        if (cfg.inner_solver == InnerSolver::matrix_free_lsqr) {
            LsqrResult inner = lsqr_min_norm(op, b, cfg.lsqr);
            x = std::move(inner.x);
            rec.inner_residual = inner.stats.residual;
            rec.lsqr = std::move(inner.stats);
        } else {
            DenseMinNormResult inner = dense_min_norm_solve(op, b, cfg.dense_rank_threshold);
            x = std::move(inner.x);
            rec.inner_residual = inner.residual;
            rec.dense_rank = inner.rank;
        }
        rec.solve_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - solve_start).count();

        const ComplexMatrix F_next = F + unvec(x, n, n);
        if (!F_next.allFinite()) {
            throw ConvergenceError("sgfa: iterate contains NaN or Inf", iter);
        }

        const IterationRecord measured = measure(iter, A, F_next, T_next, result.Lambda);
        rec.k = measured.k;
        rec.accuracy = measured.accuracy;
        rec.basis_norm = measured.basis_norm;
        rec.sigma_min = measured.sigma_min;
        rec.sigma_max = measured.sigma_max;
        rec.offdiag = measured.offdiag;
        rec.feasibility = measured.feasibility;

        if (observer) {
            observer(rec, F_next, T_next);
        }
        const double offdiag_now = rec.offdiag;
        const SingularExtremes extremes{rec.sigma_min, rec.sigma_max};
        if (cfg.track_history) {
            result.history.push_back(std::move(rec));
        }

        if (!passes_stability(cfg, extremes)) {
            result.iterations_run = iter;
            if (iter == 1) {
                // Even the first update is too unstable; the unitary Schur
                // basis is the best stable estimate available.
                result.F = pair.U;
                result.termination = SgfaTermination::initial_schur_returned;
            } else {
                result.F = std::move(F);
                result.termination = SgfaTermination::stability_floor_hit;
            }
            return result;
        }

        F = F_next;
        T = T_next;

        if (offdiag_now <= cfg.offdiag_tol * offdiag_initial) {
            result.F = std::move(F);
            result.iterations_run = iter;
            result.termination = SgfaTermination::offdiag_converged;
            return result;
        }
    }

    result.F = std::move(F);
    result.iterations_run = cfg.max_outer;
    result.termination = SgfaTermination::max_outer_reached;
    return result;
}

SgfaResult sgfa_run_left(const SparseShift& A, const SgfaConfig& cfg,
                         const SgfaObserver& observer) {
    return sgfa_run(A.adjoint(), cfg, observer);
}

}  // namespace stablegft
