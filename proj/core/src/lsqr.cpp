#include "stablegft/lsqr.hpp"

#include <cmath>
#include <string>

#include "stablegft/errors.hpp"

namespace stablegft {

namespace {

void validate(const LsqrSettings& s) {
    if (s.max_iters < 1) {
        throw InvalidArgumentError("lsqr: max_iters must be at least 1, got " +
                                   std::to_string(s.max_iters));
    }
    if (!(s.atol > 0.0 && s.atol < 1.0) || !(s.btol > 0.0 && s.btol < 1.0)) {
        throw InvalidArgumentError("lsqr: atol and btol must lie in (0, 1)");
    }
    if (!(s.conlim > 0.0)) {
        throw InvalidArgumentError("lsqr: conlim must be positive");
    }
}

}  // namespace

LsqrResult lsqr_min_norm(const SylvesterOperator& op, const ComplexVector& b,
                         const LsqrSettings& settings) {
    validate(settings);
    if (b.size() != op.size()) {
        throw InvalidArgumentError("lsqr: expected right-hand side of length " +
                                   std::to_string(op.size()) + ", got " +
                                   std::to_string(b.size()));
    }

    LsqrResult result;
    result.x = ComplexVector::Zero(op.size());
    LsqrStats& stats = result.stats;

    const double bnorm = b.norm();
    stats.residual_history.push_back(bnorm);
    if (bnorm == 0.0) {
        stats.termination = LsqrTermination::zero_rhs;
        return result;
    }

    // Golub-Kahan bidiagonalization: alpha and beta are real norms, u and v
    // the complex Lanczos vectors, w the search direction.
    ComplexVector u = b / bnorm;
    double beta = bnorm;
    ComplexVector v = op.apply_adjoint(u);
    double alpha = v.norm();
    if (alpha == 0.0) {
        // b is orthogonal to the range of K; x = 0 is already the
        // least-squares point.
        stats.termination = LsqrTermination::normal_equations_tol;
        stats.residual = bnorm;
        stats.residual_estimate = bnorm;
        return result;
    }
    v /= alpha;
    ComplexVector w = v;

    double phibar = beta;
    double rhobar = alpha;
    double norm_K_sq = 0.0;  // running ||K||_F^2 estimate
    double dd_sq = 0.0;      // sum of ||w_i / rho_i||^2, for the condition estimate
    stats.termination = LsqrTermination::max_iters_reached;

    for (std::int64_t iter = 1; iter <= settings.max_iters; ++iter) {
        // Next bidiagonalization step:
        //   beta_{i+1} u_{i+1} = K v_i     - alpha_i u_i
        //   alpha_{i+1} v_{i+1} = K^H u_{i+1} - beta_{i+1} v_i
        u = op.apply(v) - alpha * u;
        beta = u.norm();
        norm_K_sq += alpha * alpha + beta * beta;
        if (beta > 0.0) {
            u /= beta;
            v = op.apply_adjoint(u) - beta * v;
            alpha = v.norm();
            if (alpha > 0.0) {
                v /= alpha;
            }
        } else {
            alpha = 0.0;
        }

        // Plane rotation eliminating beta from the lower bidiagonal factor:
        // [ c  s ][ rhobar    0   phibar ]   [ rho  theta  phi    ]
        // [ s -c ][ beta   alpha    0    ] = [ 0    rhobar' phibar' ]
        const double rho = std::hypot(rhobar, beta);
        const double c = rhobar / rho;
        const double s = beta / rho;
        const double theta = s * alpha;
        rhobar = -c * alpha;
        const double phi = c * phibar;
        phibar = s * phibar;

        result.x += (phi / rho) * w;
        dd_sq += w.squaredNorm() / (rho * rho);
        w = v - (theta / rho) * w;

        stats.iterations = iter;
        stats.residual_estimate = phibar;
        stats.residual_history.push_back(phibar);

        const double norm_K = std::sqrt(norm_K_sq);
        const double cond = norm_K * std::sqrt(dd_sq);
        const double norm_x = result.x.norm();
        stats.normal_residual = alpha * std::abs(c) * phibar;
        stats.operator_norm = norm_K;
        stats.condition = cond;

        if (phibar <= settings.btol * bnorm + settings.atol * norm_K * norm_x) {
            stats.termination = LsqrTermination::residual_tol;
            break;
        }
        if (stats.normal_residual <= settings.atol * norm_K * phibar || alpha == 0.0) {
            stats.termination = LsqrTermination::normal_equations_tol;
            break;
        }
        if (cond >= settings.conlim) {
            stats.termination = LsqrTermination::condition_limit;
            break;
        }
    }

    stats.residual = (op.apply(result.x) - b).norm();
    return result;
}

}  // namespace stablegft
