#pragma once

#include <string>
#include <vector>

#include "stablegft/sgfa.hpp"
#include "stablegft/sparse_shift.hpp"

namespace acceptance {

/// Accumulates the checks of one acceptance criterion and prints the
/// one-line verdict the suite is graded on:
///
///   [acceptance] C<n> <name>: PASS | FAIL | SKIP (<notice>)
///
/// Failed checks are listed under the verdict with their detail strings so a
/// red line is diagnosable from the log alone.
class Criterion {
public:
    Criterion(int number, std::string name);

    /// Records one check. The detail should state what was measured, not
    /// just what failed.
    void require(bool condition, const std::string& detail);

    /// Records a measurement worth keeping in the log even on PASS.
    void note(const std::string& detail);

    bool passed() const { return failures_.empty(); }

    /// Prints the verdict and the accumulated notes/failures; returns
    /// passed() so callers can assert on it.
    bool finish() const;

    /// Prints a SKIP verdict with the notice. For criteria whose inputs are
    /// not present rather than not satisfied.
    void skip(const std::string& notice) const;

private:
    int number_;
    std::string name_;
    std::vector<std::string> notes_;
    std::vector<std::string> failures_;
    std::size_t checks_ = 0;
};

/// One instance of the shared contraction-bound ensemble: a seeded random
/// shift and its full run on the exact-projection path.
struct EnsembleInstance {
    stablegft::SparseShift A;
    stablegft::SgfaResult result;
};

/// 50 seeded directed random shifts (n = 30, p = 0.1) run with
/// beta = 0.5, alpha = 1e-6 on the dense exact inner-solve path, history
/// tracked. Built once and shared by the bound, monotonicity, stability,
/// and round-trip criteria.
const std::vector<EnsembleInstance>& shared_ensemble();

/// The fixed configuration of the ensemble runs, for criteria that need the
/// alpha/beta values that produced them.
const stablegft::SgfaConfig& ensemble_config();

}  // namespace acceptance
