#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "stablegft/dense_kernels.hpp"
#include "stablegft/epsilon_schur.hpp"
#include "stablegft/errors.hpp"
#include "stablegft/schur.hpp"

using namespace stablegft;

namespace {

double max_strict_upper(const ComplexMatrix& T) {
    double m = 0.0;
    for (Index j = 0; j < T.cols(); ++j) {
        for (Index i = 0; i < j; ++i) {
            m = std::max(m, std::abs(T(i, j)));
        }
    }
    return m;
}

}  // namespace

TEST_SUITE("epsilon_schur") {

TEST_CASE("off-diagonal magnitudes are capped by epsilon") {
    std::mt19937_64 rng(91);
    SparseShift A = oracle::random_shift(8, 0.5, rng, true);
    for (double eps : {1.0, 0.3, 0.05}) {
        EpsilonSchur es = epsilon_schur(A, eps);
        CHECK(max_strict_upper(es.T_eps) <= eps * (1.0 + 1e-12));
    }
}

TEST_CASE("the basis pays for triangular smallness with singularity") {
    std::mt19937_64 rng(92);
    SparseShift A = oracle::random_shift(6, 0.5, rng, true);
    const double eps = 0.2;
    EpsilonSchur es = epsilon_schur(A, eps);
    const double sigma_min = singular_extremes(es.F_eps).sigma_min;
    CHECK(sigma_min <= std::pow(eps, 5) + 1e-12);

    // F(eps) = U D with U unitary, so the singular values are exactly the
    // diagonal scalings theta^k.
    const double theta = es.t > 1.0 ? eps / es.t : eps;
    CHECK(std::abs(sigma_min - std::pow(theta, 5)) <= 1e-12);
}

TEST_CASE("rescaling is the exact diagonal similarity of the Schur pair") {
    std::mt19937_64 rng(93);
    SparseShift A = oracle::random_shift(7, 0.4, rng);
    SchurPair pair = schur(A);
    const double eps = 0.15;
    EpsilonSchur es = epsilon_schur(A, eps);
    const double theta = es.t > 1.0 ? eps / es.t : eps;

    for (Index j = 0; j < 7; ++j) {
        CHECK(es.T_eps(j, j) == pair.T(j, j));
        for (Index i = 0; i < j; ++i) {
            const Complex expected = pair.T(i, j) * std::pow(theta, double(j - i));
            CHECK(std::abs(es.T_eps(i, j) - expected) <= 1e-15 * std::abs(expected) + 1e-300);
        }
    }
    for (Index j = 0; j < 7; ++j) {
        const double scale = std::pow(theta, double(j));
        CHECK((es.F_eps.col(j) - pair.U.col(j) * scale).norm() <= 1e-15 * scale);
    }
}

TEST_CASE("the rescaled pair still diagonalizes the shift") {
    std::mt19937_64 rng(94);
    SparseShift A = oracle::random_shift(6, 0.5, rng, true);
    const double eps = 0.3;
    EpsilonSchur es = epsilon_schur(A, eps);
    ComplexMatrix recon = es.F_eps * es.T_eps * invert(es.F_eps);
    CHECK((recon - A.dense()).norm() <= 1e-8 * A.frobenius_norm());
}

TEST_CASE("underflowing scale factors are reported, not silently flushed") {
    std::mt19937_64 rng(95);
    SparseShift A = oracle::random_shift(5, 0.6, rng);
    CHECK_THROWS_AS(epsilon_schur(A, 1e-300), OverflowError);
    CHECK_THROWS_AS(epsilon_schur(A, 0.0), InvalidArgumentError);
    CHECK_THROWS_AS(epsilon_schur(A, -0.5), InvalidArgumentError);
}

TEST_CASE("calibration bounds the accuracy by the target") {
    std::mt19937_64 rng(96);
    SparseShift A = oracle::random_shift(6, 0.5, rng, true);
    const double target = 1e-6;
    const double eps = epsilon_for_target(target, std::sqrt(6.0), 6);
    EpsilonSchur es = epsilon_schur(A, eps);
    const ComplexVector Lambda = es.T_eps.diagonal();
    const double accuracy = (A.dense() * es.F_eps - es.F_eps * Lambda.asDiagonal()).norm();
    // accuracy = ||F (T - Lambda)|| <= ||F||_F * sqrt(n(n-1)/2) * eps, and
    // the calibration divides the target by exactly that envelope with
    // ||F||_F <= sqrt(n).
    CHECK(accuracy <= target * (1.0 + 1e-12));
}

}  // TEST_SUITE
