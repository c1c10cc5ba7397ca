#include "stablegft/sparse_shift.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "stablegft/errors.hpp"

namespace stablegft {

namespace {

std::string coordinate_string(Index row, Index col) {
    return "(" + std::to_string(row) + ", " + std::to_string(col) + ")";
}

}  // namespace

SparseShift::SparseShift(Index n, std::vector<ShiftEntry> entries)
    : n_(n), entries_(std::move(entries)) {
    if (n_ < 1) {
        throw InvalidArgumentError("SparseShift: node count must be at least 1, got " +
                                   std::to_string(n_));
    }
    for (const ShiftEntry& e : entries_) {
        if (e.row < 0 || e.row >= n_ || e.col < 0 || e.col >= n_) {
            throw InvalidArgumentError("SparseShift: coordinate " +
                                       coordinate_string(e.row, e.col) +
                                       " outside [0, " + std::to_string(n_) + ")");
        }
        if (!std::isfinite(e.weight.real()) || !std::isfinite(e.weight.imag())) {
            throw InvalidArgumentError("SparseShift: non-finite weight at " +
                                       coordinate_string(e.row, e.col));
        }
        if (e.weight == Complex(0.0, 0.0)) {
            throw InvalidArgumentError("SparseShift: explicit zero weight at " +
                                       coordinate_string(e.row, e.col));
        }
    }

    std::sort(entries_.begin(), entries_.end(), [](const ShiftEntry& a, const ShiftEntry& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].row == entries_[i - 1].row && entries_[i].col == entries_[i - 1].col) {
            throw InvalidArgumentError("SparseShift: duplicate coordinate " +
                                       coordinate_string(entries_[i].row, entries_[i].col));
        }
    }

    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(entries_.size());
    for (const ShiftEntry& e : entries_) {
        triplets.emplace_back(static_cast<int>(e.row), static_cast<int>(e.col), e.weight);
    }
    matrix_.resize(n_, n_);
    matrix_.setFromTriplets(triplets.begin(), triplets.end());
    matrix_.makeCompressed();
}

SparseShift SparseShift::from_dense(const ComplexMatrix& dense) {
    if (dense.rows() != dense.cols()) {
        throw InvalidArgumentError("SparseShift: dense input must be square, got " +
                                   std::to_string(dense.rows()) + "x" +
                                   std::to_string(dense.cols()));
    }
    std::vector<ShiftEntry> entries;
    for (Index j = 0; j < dense.cols(); ++j) {
        for (Index i = 0; i < dense.rows(); ++i) {
            if (dense(i, j) != Complex(0.0, 0.0)) {
                entries.push_back({i, j, dense(i, j)});
            }
        }
    }
    return SparseShift(dense.rows(), std::move(entries));
}

SparseShift SparseShift::adjoint() const {
    std::vector<ShiftEntry> entries;
    entries.reserve(entries_.size());
    for (const ShiftEntry& e : entries_) {
        entries.push_back({e.col, e.row, std::conj(e.weight)});
    }
    return SparseShift(n_, std::move(entries));
}

double SparseShift::frobenius_norm() const {
    double sum = 0.0;
    for (const ShiftEntry& e : entries_) {
        sum += std::norm(e.weight);
    }
    return std::sqrt(sum);
}

bool SparseShift::is_real() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const ShiftEntry& e) { return e.weight.imag() == 0.0; });
}

}  // namespace stablegft
