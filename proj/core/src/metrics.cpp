#include "stablegft/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stablegft/dense_kernels.hpp"
#include "stablegft/errors.hpp"

namespace stablegft::metrics {

namespace {

std::vector<double> decade_edges() {
    std::vector<double> edges;
    for (int e = -16; e <= 0; ++e) {
        edges.push_back(std::pow(10.0, e));
    }
    return edges;
}

void require_conforming(const SparseShift& A, const ComplexMatrix& F,
                        const ComplexVector& Lambda, const char* who) {
    if (F.rows() != A.n() || F.cols() != A.n() || Lambda.size() != A.n()) {
        throw InvalidArgumentError(std::string(who) + ": shapes do not conform (n = " +
                                   std::to_string(A.n()) + ", F " + std::to_string(F.rows()) +
                                   "x" + std::to_string(F.cols()) + ", Lambda " +
                                   std::to_string(Lambda.size()) + ")");
    }
}

double nearest_rank(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) {
        return 0.0;
    }
    const auto rank = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(sorted.size())));
    return sorted[std::min(sorted.size() - 1, rank == 0 ? 0 : rank - 1)];
}

/// JSON value for a double that survives non-finite entries.
nlohmann::json json_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

void append_number(std::ostringstream& out, double v) {
    if (std::isnan(v)) {
        out << "nan";
    } else if (std::isinf(v)) {
        out << (v > 0 ? "inf" : "-inf");
    } else {
        out.precision(17);
        out << v;
    }
}

}  // namespace

MetricsOptions::MetricsOptions() : bin_edges(decade_edges()) {}

double accuracy(const SparseShift& A, const ComplexMatrix& F, const ComplexVector& Lambda) {
    require_conforming(A, F, Lambda, "accuracy");
    return (A.matrix() * F - F * Lambda.asDiagonal()).norm();
}

ComponentErrorHistogram component_errors(const SparseShift& A, const ComplexMatrix& F,
                                         const ComplexVector& Lambda,
                                         const std::vector<double>& bin_edges) {
    require_conforming(A, F, Lambda, "component_errors");
    ComponentErrorHistogram hist;
    hist.bin_edges = bin_edges.empty() ? decade_edges() : bin_edges;
    if (!std::is_sorted(hist.bin_edges.begin(), hist.bin_edges.end())) {
        throw InvalidArgumentError("component_errors: bin edges must be ascending");
    }
    hist.counts.assign(hist.bin_edges.size() + 1, 0);

    const ComplexMatrix residual = A.matrix() * F - F * Lambda.asDiagonal();
    const double scale = 1.0 / static_cast<double>(A.n());
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(residual.size()));
    for (Index j = 0; j < residual.cols(); ++j) {
        for (Index i = 0; i < residual.rows(); ++i) {
            values.push_back(std::abs(residual(i, j)) * scale);
        }
    }

    for (double v : values) {
        const auto it = std::upper_bound(hist.bin_edges.begin(), hist.bin_edges.end(), v);
        hist.counts[static_cast<std::size_t>(it - hist.bin_edges.begin())] += 1;
    }
    hist.total = static_cast<std::int64_t>(values.size());
    std::sort(values.begin(), values.end());
    hist.max_value = values.empty() ? 0.0 : values.back();
    hist.q50 = nearest_rank(values, 0.50);
    hist.q75 = nearest_rank(values, 0.75);
    hist.q90 = nearest_rank(values, 0.90);
    hist.q99 = nearest_rank(values, 0.99);
    return hist;
}

double condition_number(const ComplexMatrix& F) {
    const SingularExtremes extremes = singular_extremes(F);
    if (extremes.sigma_min == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return extremes.sigma_max / extremes.sigma_min;
}

double inverse_error(const ComplexMatrix& F) {
    const ComplexMatrix F_inv = invert(F);
    const ComplexMatrix I = ComplexMatrix::Identity(F.rows(), F.cols());
    return std::max((F * F_inv - I).norm(), (F_inv * F - I).norm());
}

std::optional<double> angle(const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != y.size()) {
        throw InvalidArgumentError("angle: vectors must have equal length");
    }
    const double nx = x.norm();
    const double ny = y.norm();
    if (nx == 0.0 || ny == 0.0) {
        return std::nullopt;
    }
    const double cosine = std::clamp(x.dot(y).real() / (nx * ny), -1.0, 1.0);
    return std::acos(cosine) * 180.0 / std::numbers::pi;
}

LrDiscrepancy lr_discrepancy(const ComplexMatrix& F_right, const ComplexMatrix& W_left) {
    if (F_right.rows() != W_left.rows() || F_right.cols() != W_left.cols()) {
        throw InvalidArgumentError("lr_discrepancy: bases must have equal shapes");
    }
    ComplexMatrix W_adj_inv;
    try {
        W_adj_inv = invert(W_left.adjoint());
    } catch (const SingularMatrixError& e) {
        throw SingularMatrixError("lr_discrepancy: left basis W^H is singular",
                                  e.pivot_magnitude);
    }
    ComplexMatrix F_adj_inv;
    try {
        F_adj_inv = invert(F_right.adjoint());
    } catch (const SingularMatrixError& e) {
        throw SingularMatrixError("lr_discrepancy: right basis F^H is singular",
                                  e.pivot_magnitude);
    }
    LrDiscrepancy out;
    out.right_error = (F_right - W_adj_inv).norm();
    out.left_error = (W_left - F_adj_inv).norm();
    out.mean = 0.5 * (out.right_error + out.left_error);
    return out;
}

MetricsReport MetricsReport::compute(const SparseShift& A, const ComplexMatrix& F,
                                     const ComplexVector& Lambda,
                                     const MetricsOptions& options) {
    require_conforming(A, F, Lambda, "MetricsReport::compute");
    MetricsReport report;
    report.accuracy = metrics::accuracy(A, F, Lambda);
    const SingularExtremes extremes = singular_extremes(F);
    report.sigma_min = extremes.sigma_min;
    report.sigma_max = extremes.sigma_max;
    report.condition = extremes.sigma_min == 0.0 ? std::numeric_limits<double>::infinity()
                                              : extremes.sigma_max / extremes.sigma_min;
    try {
        report.inverse_error = metrics::inverse_error(F);
    } catch (const SingularMatrixError&) {
        report.inverse_error = std::numeric_limits<double>::infinity();
    }
    report.component_errors = metrics::component_errors(A, F, Lambda, options.bin_edges);

    const ComplexMatrix AF = A.matrix() * F;
    report.angles_deg.resize(static_cast<std::size_t>(F.cols()));
    for (Index i = 0; i < F.cols(); ++i) {
        const ComplexVector image = AF.col(i);
        const ComplexVector reference = Lambda(i) * F.col(i);
        AngleEntry& entry = report.angles_deg[static_cast<std::size_t>(i)];
        const std::optional<double> theta = metrics::angle(image, reference);
        if (!theta.has_value()) {
            entry = {0.0, false};
            continue;
        }
        entry.degrees = *theta;
        entry.defined =
            options.literal_angles || reference.norm() >= 1e-12 * F.col(i).norm();
    }
    return report;
}

std::string MetricsReport::to_json() const {
    nlohmann::json j;
    j["accuracy"] = json_number(accuracy);
    j["sigma_min"] = json_number(sigma_min);
    j["sigma_max"] = json_number(sigma_max);
    j["condition"] = json_number(condition);
    j["inverse_error"] = json_number(inverse_error);
    j["component_max"] = json_number(component_errors.max_value);
    j["component_q50"] = json_number(component_errors.q50);
    j["component_q75"] = json_number(component_errors.q75);
    j["component_q90"] = json_number(component_errors.q90);
    j["component_q99"] = json_number(component_errors.q99);
    j["component_total"] = component_errors.total;
    j["histogram_bin_edges"] = component_errors.bin_edges;
    j["histogram_counts"] = component_errors.counts;
    nlohmann::json degrees = nlohmann::json::array();
    nlohmann::json defined = nlohmann::json::array();
    for (const AngleEntry& entry : angles_deg) {
        degrees.push_back(json_number(entry.degrees));
        defined.push_back(entry.defined);
    }
    j["angles_deg"] = std::move(degrees);
    j["angles_defined"] = std::move(defined);
    return j.dump(2);
}

std::string MetricsReport::csv_header() const {
    std::ostringstream out;
    out << "accuracy,sigma_min,sigma_max,condition,inverse_error,component_max,"
           "component_q50,component_q75,component_q90,component_q99,angle_defined,"
           "angle_mean_deg,angle_max_deg";
    for (std::size_t b = 0; b < component_errors.counts.size(); ++b) {
        out << ",hist_" << b;
    }
    return out.str();
}

std::string MetricsReport::csv_row() const {
    double angle_sum = 0.0;
    double angle_max = 0.0;
    std::int64_t defined = 0;
    for (const AngleEntry& entry : angles_deg) {
        if (entry.defined) {
            defined += 1;
            angle_sum += entry.degrees;
            angle_max = std::max(angle_max, entry.degrees);
        }
    }
    std::ostringstream out;
    append_number(out, accuracy);
    for (double v : {sigma_min, sigma_max, condition, inverse_error, component_errors.max_value,
                     component_errors.q50, component_errors.q75, component_errors.q90,
                     component_errors.q99}) {
        out << ',';
        append_number(out, v);
    }
    out << ',' << defined << ',';
    append_number(out, defined > 0 ? angle_sum / static_cast<double>(defined) : 0.0);
    out << ',';
    append_number(out, angle_max);
    for (std::int64_t c : component_errors.counts) {
        out << ',' << c;
    }
    return out.str();
}

}  // namespace stablegft::metrics
