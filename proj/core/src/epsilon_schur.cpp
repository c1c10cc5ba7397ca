#include "stablegft/epsilon_schur.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "stablegft/errors.hpp"
#include "stablegft/schur.hpp"

namespace stablegft {

EpsilonSchur epsilon_schur(const SparseShift& A, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw InvalidArgumentError("epsilon_schur: epsilon must be positive, got " +
                                   std::to_string(epsilon));
    }
    const SchurPair pair = schur(A);
    const Index n = pair.n;

    double t = 0.0;
    for (Index j = 1; j < n; ++j) {
        for (Index i = 0; i < j; ++i) {
            t = std::max(t, std::abs(pair.T(i, j)));
        }
    }

    const double theta = t > 1.0 ? epsilon / t : epsilon;

    // powers[k] = theta^k, the diagonal of D. Computed multiplicatively and
    // checked against the normal range so a vanishing column is a loud error
    // instead of a silently rank-deficient basis.
    std::vector<double> powers(static_cast<std::size_t>(n));
    powers[0] = 1.0;
    for (Index k = 1; k < n; ++k) {
        powers[static_cast<std::size_t>(k)] = powers[static_cast<std::size_t>(k - 1)] * theta;
        const double p = powers[static_cast<std::size_t>(k)];
        if (p != 0.0 && std::abs(p) >= std::numeric_limits<double>::min()) {
            continue;
        }
        throw OverflowError("epsilon_schur: theta^k underflowed (theta = " +
                                std::to_string(theta) + ")",
                            k);
    }

    EpsilonSchur out;
    out.epsilon = epsilon;
    out.t = t;
    out.F_eps = pair.U;
    for (Index j = 0; j < n; ++j) {
        out.F_eps.col(j) *= powers[static_cast<std::size_t>(j)];
    }
    out.T_eps = pair.T;
    for (Index j = 1; j < n; ++j) {
        for (Index i = 0; i < j; ++i) {
            out.T_eps(i, j) *= powers[static_cast<std::size_t>(j - i)];
        }
    }
    return out;
}

double epsilon_for_target(double eps_target, double basis_norm, Index n) {
    if (!(eps_target > 0.0) || !(basis_norm > 0.0) || n < 2) {
        throw InvalidArgumentError(
            "epsilon_for_target: need eps_target > 0, basis_norm > 0, n >= 2");
    }
    const double entries = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
    return eps_target / (basis_norm * std::sqrt(entries));
}

}  // namespace stablegft
