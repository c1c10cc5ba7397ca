#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stablegft/sparse_shift.hpp"
#include "stablegft/types.hpp"

namespace stablegft::metrics {

/// Log-binned distribution of normalized component errors |(A f_i - lambda_i
/// f_i)_j| / n over all (column i, component j) pairs.
///
/// counts has bin_edges.size() + 1 entries: counts[0] collects values below
/// bin_edges[0], counts[b] (1 <= b < size) collects [bin_edges[b-1],
/// bin_edges[b]), and counts.back() collects values >= bin_edges.back().
/// Quantiles use the nearest-rank rule on the sorted values.
struct ComponentErrorHistogram {
    std::vector<double> bin_edges;
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
    double max_value = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double q90 = 0.0;
    double q99 = 0.0;
};

/// Angle of one basis column's image against its eigenvalue-scaled self,
/// with a flag marking columns where the reference vector is too small for
/// the angle to mean anything.
struct AngleEntry {
    double degrees = 0.0;
    bool defined = false;
};

struct MetricsOptions {
    /// Histogram bin edges, ascending. Default: decades 1e-16 ... 1e0.
    std::vector<double> bin_edges;
    /// Keep the raw arccos value even for columns whose reference vector
    /// lambda_i f_i nearly vanishes. Near-zero eigenvalues then show up as a
    /// spurious spike at 90 degrees; the default instead flags those entries
    /// as undefined.
    bool literal_angles = false;

    MetricsOptions();
};

/// Full diagnostic block for a computed basis.
struct MetricsReport {
    double accuracy = 0.0;       ///< ||A F - F Lambda||_F
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    double condition = 0.0;      ///< sigma_max / sigma_min; +inf when sigma_min = 0
    double inverse_error = 0.0;  ///< max(||F F^-1 - I||_F, ||F^-1 F - I||_F); +inf if singular
    ComponentErrorHistogram component_errors;
    std::vector<AngleEntry> angles_deg;  ///< theta(A f_i, lambda_i f_i) per column

    static MetricsReport compute(const SparseShift& A, const ComplexMatrix& F,
                                 const ComplexVector& Lambda, const MetricsOptions& options = {});

    /// Flat JSON object with every field (angles as parallel arrays).
    /// Non-finite values are encoded as the strings "inf" / "nan".
    std::string to_json() const;

    /// One CSV row of scalar summaries. Column order (stable, also produced
    /// by csv_header): accuracy, sigma_min, sigma_max, condition,
    /// inverse_error, component_max, component_q50, component_q75,
    /// component_q90, component_q99, angle_defined, angle_mean_deg,
    /// angle_max_deg, then one hist_* column per histogram bucket.
    std::string csv_row() const;
    std::string csv_header() const;
};

/// ||A F - F Lambda||_F. Throws InvalidArgumentError on shape mismatch.
double accuracy(const SparseShift& A, const ComplexMatrix& F, const ComplexVector& Lambda);

ComponentErrorHistogram component_errors(const SparseShift& A, const ComplexMatrix& F,
                                         const ComplexVector& Lambda,
                                         const std::vector<double>& bin_edges = {});

/// sigma_max(F) / sigma_min(F); +inf when sigma_min = 0.
double condition_number(const ComplexMatrix& F);

/// max(||F F^-1 - I||_F, ||F^-1 F - I||_F). Propagates SingularMatrixError.
double inverse_error(const ComplexMatrix& F);

/// Angle between complex vectors seen as real vectors of twice the length:
/// arccos of Re(x^H y) / (||x|| ||y||), clamped to [-1, 1], in degrees.
/// Returns nullopt when either vector is exactly zero.
std::optional<double> angle(const ComplexVector& x, const ComplexVector& y);

/// Mismatch between a right basis and an independently computed left basis.
struct LrDiscrepancy {
    double right_error;  ///< ||F - (W^H)^{-1}||_F
    double left_error;   ///< ||W - (F^H)^{-1}||_F
    double mean;
};

/// Throws SingularMatrixError naming the offending matrix when W^H or F^H
/// cannot be inverted.
LrDiscrepancy lr_discrepancy(const ComplexMatrix& F_right, const ComplexMatrix& W_left);

}  // namespace stablegft::metrics
