#pragma once

#include <cstdint>

#include "stablegft/sparse_shift.hpp"
#include "stablegft/types.hpp"

namespace stablegft {

/// Closed-form iterate of the stable-basis iteration on the n-by-n nilpotent
/// Jordan block (ones on the superdiagonal, zeros elsewhere). For this shift
/// every iterate is diagonal and known exactly:
///
///   F_k = gamma_k * diag(1, beta^k, ..., beta^{k(n-1)}),
///   gamma_k = prod_{i=1..k} S(beta^{2i-1}) / S(beta^{2i}),   S(q) = sum_{j=0}^{n-1} q^j,
///   sigma_min(F_k) = gamma_k * beta^{k(n-1)},
///   accuracy^2 = gamma_k^2 * sum_{j=1}^{n-1} beta^{2kj}.
///
/// gamma_0 = 1 (empty product), so F_0 = I and accuracy(0) = sqrt(n-1), the
/// off-diagonal mass of the raw triangular factor. gamma_k is nondecreasing
/// toward a finite limit >= 1 while sigma_min decays geometrically: the block
/// admits arbitrarily accurate bases only at the price of unbounded
/// ill-conditioning, which is the obstruction the stability tolerance guards
/// against.
struct JordanOracle {
    Index n;
    double beta;
    std::int64_t k;
    double gamma_k;
    ComplexMatrix F_k_closed;     ///< gamma_k * diag(1, beta^k, ..., beta^{k(n-1)})
    double sigma_min_closed;
    double accuracy_sq_closed;
};

/// Evaluates the closed forms above. Requires n >= 2, beta in (0, 1), k >= 0;
/// throws OverflowError, carrying the offending exponent, if beta^{k(n-1)}
/// underflows.
JordanOracle jordan_oracle(Index n, double beta, std::int64_t k);

/// The n-by-n nilpotent Jordan block as a shift (the test input the closed
/// forms describe).
SparseShift jordan_block_shift(Index n);

}  // namespace stablegft
