#pragma once

#include <vector>

#include <Eigen/SparseCore>

#include "stablegft/types.hpp"

namespace stablegft {

/// One stored coordinate of a graph shift.
struct ShiftEntry {
    Index row;
    Index col;
    Complex weight;
};

/// Weighted adjacency matrix of a directed graph, stored sparse.
///
/// Invariants enforced on construction: indices in [0, n), weights finite and
/// nonzero, no duplicate (row, col) coordinates. The entry list is kept in
/// column-major order so serialization is canonical. Immutable after
/// construction and safe to share across threads.
class SparseShift {
public:
    /// Validates and stores the given entries. Throws InvalidArgumentError on
    /// any invariant violation (n < 1, index out of range, non-finite or zero
    /// weight, duplicate coordinate).
    SparseShift(Index n, std::vector<ShiftEntry> entries);

    /// Collects the nonzero entries of a dense matrix. Entries that compare
    /// exactly equal to zero are dropped.
    static SparseShift from_dense(const ComplexMatrix& dense);

    Index n() const { return n_; }
    Index nnz() const { return static_cast<Index>(entries_.size()); }

    /// Entries in column-major order.
    const std::vector<ShiftEntry>& entries() const { return entries_; }

    /// Compressed-column view for matrix products.
    const Eigen::SparseMatrix<Complex>& matrix() const { return matrix_; }

    ComplexMatrix dense() const { return ComplexMatrix(matrix_); }

    /// Conjugate transpose as a new shift (left-eigenvector runs operate on it).
    SparseShift adjoint() const;

    double frobenius_norm() const;

    /// True when every stored weight has zero imaginary part.
    bool is_real() const;

private:
    Index n_;
    std::vector<ShiftEntry> entries_;
    Eigen::SparseMatrix<Complex> matrix_;
};

}  // namespace stablegft
