#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "stablegft/dense_kernels.hpp"
#include "stablegft/errors.hpp"

using namespace stablegft;

TEST_SUITE("dense_kernels") {

TEST_CASE("frobenius matches entrywise accumulation and rejects NaN") {
    std::mt19937_64 rng(31);
    ComplexMatrix M = oracle::random_matrix(9, 6, rng);
    const double reference = oracle::frob(M);
    CHECK(std::abs(frobenius(M) - reference) <= 1e-13 * reference);

    M(2, 2) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS_AS(frobenius(M), InvalidArgumentError);
}

TEST_CASE("singular values of a diagonal matrix are its moduli, sorted") {
    ComplexMatrix D = ComplexMatrix::Zero(3, 3);
    D(0, 0) = Complex(0.0, -2.0);
    D(1, 1) = Complex(3.0, 0.0);
    D(2, 2) = Complex(1.0, 0.0);
    RealVector sv = singular_values(D);
    REQUIRE(sv.size() == 3);
    CHECK(sv(0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(sv(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sv(2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("unitary matrices have all singular values equal to one") {
    std::mt19937_64 rng(32);
    ComplexMatrix U = oracle::random_unitary(8, rng);
    RealVector sv = singular_values(U);
    for (Index i = 0; i < sv.size(); ++i) {
        CHECK(std::abs(sv(i) - 1.0) <= 1e-12);
    }
    SingularExtremes ext = singular_extremes(U);
    CHECK(std::abs(ext.sigma_min - 1.0) <= 1e-12);
    CHECK(std::abs(ext.sigma_max - 1.0) <= 1e-12);
}

TEST_CASE("extremes agree with the ends of the full spectrum") {
    std::mt19937_64 rng(33);
    ComplexMatrix M = oracle::random_matrix(7, 7, rng);
    RealVector sv = singular_values(M);
    SingularExtremes ext = singular_extremes(M);
    CHECK(ext.sigma_max == doctest::Approx(sv(0)).epsilon(1e-12));
    CHECK(ext.sigma_min == doctest::Approx(sv(sv.size() - 1)).epsilon(1e-12));
    CHECK(spectral_norm(M) == doctest::Approx(sv(0)).epsilon(1e-12));
    CHECK(spectral_norm(M) <= frobenius(M) * (1.0 + 1e-14));
}

TEST_CASE("invert produces two-sided inverses at working precision") {
    std::mt19937_64 rng(34);
    ComplexMatrix A = oracle::random_matrix(6, 6, rng);
    ComplexMatrix Ainv = invert(A);
    const ComplexMatrix eye = ComplexMatrix::Identity(6, 6);
    CHECK((A * Ainv - eye).norm() <= 1e-10);
    CHECK((Ainv * A - eye).norm() <= 1e-10);
}

TEST_CASE("invert reports the failing pivot for singular input") {
    std::mt19937_64 rng(35);
    ComplexMatrix A = oracle::random_matrix(4, 4, rng);
    A.col(3) = A.col(1);
    try {
        invert(A);
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot_magnitude <= 1e-12 * A.norm());
    }

    ComplexMatrix R = oracle::random_matrix(3, 4, rng);
    CHECK_THROWS_AS(invert(R), InvalidArgumentError);
}

TEST_CASE("dense eigendecomposition reproduces eigenpairs of a generic matrix") {
    std::mt19937_64 rng(36);
    ComplexMatrix A = oracle::random_matrix(7, 7, rng);
    DenseEigen eig = dense_eigendecompose(A);
    REQUIRE(eig.V.rows() == 7);
    REQUIRE(eig.lambda.size() == 7);
    CHECK((A * eig.V - eig.V * eig.lambda.asDiagonal()).norm() <= 1e-12 * A.norm());
    for (Index j = 0; j < 7; ++j) {
        CHECK(eig.V.col(j).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("dense eigendecomposition stays finite on defective input") {
    // A single shift-by-one chain has one eigenvector repeated n times, so
    // the computed basis must be finite but numerically singular. The
    // all-ones matrix piles 99 copies of the eigenvalue zero onto a rank-one
    // update; it is diagonalizable, and while the solver does not
    // orthogonalize within the repeated eigenspace, the basis must stay far
    // from singular.
    const Index n = 100;
    ComplexMatrix chain = ComplexMatrix::Zero(n, n);
    for (Index i = 0; i + 1 < n; ++i) {
        chain(i, i + 1) = Complex(1.0, 0.0);
    }
    DenseEigen defective = dense_eigendecompose(chain);
    CHECK(defective.V.allFinite());
    CHECK(singular_extremes(defective.V).sigma_min <= 1e-12);
    CHECK(defective.lambda.cwiseAbs().maxCoeff() <= 1e-10);

    DenseEigen ones = dense_eigendecompose(ComplexMatrix::Ones(n, n));
    CHECK(ones.V.allFinite());
    CHECK(singular_extremes(ones.V).sigma_min >= 1e-6);

    std::mt19937_64 rng(37);
    CHECK_THROWS_AS(dense_eigendecompose(oracle::random_matrix(3, 4, rng)),
                    InvalidArgumentError);
}

}  // TEST_SUITE
