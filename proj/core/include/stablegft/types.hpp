#pragma once

#include <complex>

#include <Eigen/Core>

namespace stablegft {

/// Scalar type used throughout: all decompositions run in complex arithmetic
/// even for real inputs, because the triangular factor of a real Schur form
/// has 2x2 blocks and the contraction step needs an exactly triangular T.
using Complex = std::complex<double>;

/// Dense complex matrix, column-major. Element access is (row, col).
using ComplexMatrix = Eigen::MatrixXcd;

/// Dense complex column vector.
using ComplexVector = Eigen::VectorXcd;

/// Dense real column vector (singular values, TV values, ...).
using RealVector = Eigen::VectorXd;

using Index = Eigen::Index;

/// Stacks the columns of X into a single vector (column-major vec operator).
inline ComplexVector vec(const ComplexMatrix& X) {
    return X.reshaped();
}

/// Inverse of vec: reinterprets x as an n-by-m matrix, column-major.
inline ComplexMatrix unvec(const ComplexVector& x, Index n, Index m) {
    return x.reshaped(n, m);
}

}  // namespace stablegft
