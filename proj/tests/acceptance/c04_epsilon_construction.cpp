#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "stablegft/dense_kernels.hpp"
#include "stablegft/epsilon_schur.hpp"
#include "stablegft/sparse_shift.hpp"

#include "support.hpp"

using namespace stablegft;

namespace {

constexpr double kSigmaSlack = 1e-12;
constexpr double kReconRelTol = 1e-8;
// A basis counts as invertible at working precision when its condition
// number stays below this and the explicit inverse succeeds.
constexpr double kInvertibleKappa = 1e6;

// Dense complex gaussian shift scaled to unit Frobenius norm. Normalizing
// keeps the raw triangular factor's off-diagonal entries below one, so theta
// equals the requested eps and the moderate-eps cells stay invertible.
SparseShift unit_norm_shift(Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix dense(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) dense(i, j) = Complex(gauss(rng), gauss(rng));
    dense /= dense.norm();
    return SparseShift::from_dense(dense);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

}  // namespace

TEST_CASE("C4 epsilon-scaled construction") {
    acceptance::Criterion crit(4, "epsilon-scaled construction");

    const std::vector<Index> sizes = {5, 20};
    const std::vector<double> epsilons = {0.5, 0.1, 0.01};
    constexpr int kSeedsPerCell = 3;

    int reconstruction_checks = 0;

    for (Index n : sizes) {
        for (double eps : epsilons) {
            for (int s = 0; s < kSeedsPerCell; ++s) {
                const std::uint64_t seed = 1000 + 100 * static_cast<std::uint64_t>(n) +
                                           10 * static_cast<std::uint64_t>(s) +
                                           static_cast<std::uint64_t>(eps * 100);
                const SparseShift A = unit_norm_shift(n, seed);
                const EpsilonSchur es = epsilon_schur(A, eps);

                const std::string cell = "n=" + std::to_string(n) + " eps=" + fmt(eps) +
                                         " seed=" + std::to_string(seed);

                double max_off = 0.0;
                for (Index j = 0; j < n; ++j)
                    for (Index i = 0; i < j; ++i)
                        max_off = std::max(max_off, std::abs(es.T_eps(i, j)));
                crit.require(max_off <= eps,
                             cell + ": off-diagonal " + fmt(max_off) + " exceeds " + fmt(eps));

                const SingularExtremes ext = singular_extremes(es.F_eps);
                const double sigma_bound = std::pow(eps, static_cast<double>(n - 1));
                crit.require(ext.sigma_min <= sigma_bound + kSigmaSlack,
                             cell + ": sigma_min " + fmt(ext.sigma_min) + " above " +
                                 fmt(sigma_bound) + " + " + fmt(kSigmaSlack));

                const double kappa = ext.sigma_max / ext.sigma_min;
                if (kappa <= kInvertibleKappa) {
                    const ComplexMatrix F_inv = invert(es.F_eps);
                    const double recon =
                        frobenius(A.dense() - es.F_eps * es.T_eps * F_inv);
                    const double budget = kReconRelTol * A.frobenius_norm();
                    crit.require(recon <= budget, cell + ": reconstruction error " + fmt(recon) +
                                                      " above " + fmt(budget));
                    ++reconstruction_checks;
                }
            }
        }
    }

    // Three cells are invertible at working precision by construction
    // (kappa = eps^{-(n-1)} <= 2^19), so the reconstruction branch must have
    // run for each of their seeds.
    crit.require(reconstruction_checks >= 3 * kSeedsPerCell,
                 "only " + std::to_string(reconstruction_checks) +
                     " reconstruction checks ran; the invertibility gate is misfiring");
    crit.note("reconstruction checked on " + std::to_string(reconstruction_checks) +
              " of 18 instances");

    CHECK(crit.finish());
}
