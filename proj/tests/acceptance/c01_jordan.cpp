#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "stablegft/jordan.hpp"
#include "stablegft/sgfa.hpp"

#include "support.hpp"

using namespace stablegft;

namespace {

// Every iterate of the run must match the closed-form iterate entrywise.
constexpr double kElementwiseTol = 1e-8;
// Tolerances for the pinned spot check at n = 3, beta = 0.5, k = 1.
constexpr double kSigmaSpotTol = 1e-8;
constexpr double kAccuracySpotTol = 1e-6;
constexpr std::int64_t kIterations = 20;

}  // namespace

TEST_CASE("C1 jordan closed-form equivalence") {
    acceptance::Criterion crit(1, "jordan closed-form equivalence");

    const std::vector<Index> sizes = {3, 5, 10};
    const std::vector<double> betas = {0.3, 0.5, 0.7};

    for (Index n : sizes) {
        for (double beta : betas) {
            SgfaConfig cfg;
            cfg.beta = beta;
            cfg.max_outer = kIterations;
            // The closed-form sigma_min decays to beta^{k(n-1)} (about 1e-94
            // in the deepest cell), so the stability floor is parked far
            // below every iterate and the off-diagonal exit is disabled to
            // let the run reach all twenty updates.
            cfg.alpha = 1e-150;
            cfg.offdiag_tol = 0.0;
            cfg.inner_solver = InnerSolver::dense_exact;

            double worst = 0.0;
            std::int64_t worst_k = -1;
            const auto observer = [&](const IterationRecord& rec, const ComplexMatrix& F,
                                      const ComplexMatrix&) {
                const JordanOracle oracle = jordan_oracle(n, beta, rec.k);
                const double diff = (F - oracle.F_k_closed).cwiseAbs().maxCoeff();
                if (diff > worst) {
                    worst = diff;
                    worst_k = rec.k;
                }
            };

            const SgfaResult result = sgfa_run(jordan_block_shift(n), cfg, observer);

            const std::string cell =
                "n=" + std::to_string(n) + " beta=" + std::to_string(beta);
            crit.require(result.termination == SgfaTermination::max_outer_reached &&
                             result.iterations_run == kIterations,
                         cell + ": run stopped early after " +
                             std::to_string(result.iterations_run) + " updates");
            crit.require(worst <= kElementwiseTol,
                         cell + ": max elementwise gap to the closed form is " +
                             std::to_string(worst) + " at k=" + std::to_string(worst_k));

            if (n == 3 && beta == 0.5) {
                const IterationRecord& first = result.history.at(1);
                crit.require(std::abs(first.sigma_min - 1.0 / 3.0) <= kSigmaSpotTol,
                             cell + " k=1: sigma_min " + std::to_string(first.sigma_min) +
                                 " != 1/3");
                crit.require(std::abs(first.accuracy - 0.745356) <= kAccuracySpotTol,
                             cell + " k=1: accuracy " + std::to_string(first.accuracy) +
                                 " != 0.745356");
                crit.note("n=3 beta=0.5 k=1: sigma_min=" + std::to_string(first.sigma_min) +
                          " accuracy=" + std::to_string(first.accuracy));
            }
        }
    }

    CHECK(crit.finish());
}
