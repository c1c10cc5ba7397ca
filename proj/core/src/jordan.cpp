#include "stablegft/jordan.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "stablegft/errors.hpp"

namespace stablegft {

namespace {

/// S(q) = 1 + q + ... + q^{n-1}.
double geometric_sum(double q, Index n) {
    double sum = 0.0;
    double term = 1.0;
    for (Index j = 0; j < n; ++j) {
        sum += term;
        term *= q;
    }
    return sum;
}

}  // namespace

JordanOracle jordan_oracle(Index n, double beta, std::int64_t k) {
    if (n < 2) {
        throw InvalidArgumentError("jordan_oracle: n must be at least 2, got " +
                                   std::to_string(n));
    }
    if (!(beta > 0.0 && beta < 1.0)) {
        throw InvalidArgumentError("jordan_oracle: beta must lie in (0, 1), got " +
                                   std::to_string(beta));
    }
    if (k < 0) {
        throw InvalidArgumentError("jordan_oracle: k must be nonnegative, got " +
                                   std::to_string(k));
    }

    JordanOracle oracle;
    oracle.n = n;
    oracle.beta = beta;
    oracle.k = k;

    oracle.gamma_k = 1.0;
    for (std::int64_t i = 1; i <= k; ++i) {
        const double numerator = geometric_sum(std::pow(beta, 2.0 * i - 1.0), n);
        const double denominator = geometric_sum(std::pow(beta, 2.0 * i), n);
        oracle.gamma_k *= numerator / denominator;
    }

    // diag entries gamma_k * beta^{k j}; checked against the normal range so a
    // vanishing sigma_min is a loud error rather than a flushed-to-zero value.
    std::vector<double> diag(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j) {
        const double exponent = static_cast<double>(k) * static_cast<double>(j);
        const double value = oracle.gamma_k * std::pow(beta, exponent);
        if (j > 0 && (value == 0.0 || value < std::numeric_limits<double>::min())) {
            throw OverflowError("jordan_oracle: beta^{k j} underflowed",
                                static_cast<std::int64_t>(k) * static_cast<std::int64_t>(j));
        }
        diag[static_cast<std::size_t>(j)] = value;
    }

    oracle.F_k_closed = ComplexMatrix::Zero(n, n);
    for (Index j = 0; j < n; ++j) {
        oracle.F_k_closed(j, j) = diag[static_cast<std::size_t>(j)];
    }
    oracle.sigma_min_closed = diag[static_cast<std::size_t>(n - 1)];

    double accuracy_sq = 0.0;
    for (Index j = 1; j < n; ++j) {
        accuracy_sq += std::pow(beta, 2.0 * static_cast<double>(k) * static_cast<double>(j));
    }
    oracle.accuracy_sq_closed = oracle.gamma_k * oracle.gamma_k * accuracy_sq;
    return oracle;
}

SparseShift jordan_block_shift(Index n) {
    if (n < 1) {
        throw InvalidArgumentError("jordan_block_shift: n must be at least 1");
    }
    std::vector<ShiftEntry> entries;
    entries.reserve(static_cast<std::size_t>(n - 1));
    for (Index i = 0; i + 1 < n; ++i) {
        entries.push_back({i, i + 1, Complex(1.0, 0.0)});
    }
    return SparseShift(n, std::move(entries));
}

}  // namespace stablegft
