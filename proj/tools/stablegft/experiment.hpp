#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stablegft/graph_io.hpp"
#include "stablegft/sgfa.hpp"
#include "stablegft/sparse_shift.hpp"
#include "stablegft/types.hpp"

namespace stablegft::cli {

/// Everything one command invocation needs, collected from flags and config
/// files. One spec plus one seed determines a run completely.
struct ExperimentSpec {
    // Input graph: an explicit file when input_path is non-empty, otherwise
    // a random draw (which requires er_n to be set).
    std::filesystem::path input_path;
    std::string format = "mm";  ///< "mm" or "edges"
    io::RandomGraphSpec random;
    bool random_requested = false;

    SgfaConfig cfg;
    std::string inner = "lsqr";  ///< "lsqr" or "dense"
    double lsqr_tol = 1e-10;     ///< sets both atol and btol

    std::filesystem::path output_dir = ".";
    std::string mode = "right";  ///< which eigenvector family decompose targets

    std::int64_t trials = 100;
    std::vector<double> p_grid;
    std::vector<double> alpha_grid;
    std::vector<double> beta_grid;
    std::vector<double> eps_grid;
    std::vector<std::int64_t> ranks;
    double sigma_threshold = 1e-12;  ///< singularity cutoff for the tails experiment

    std::int64_t jordan_n = 5;

    /// Directory with F.bin / lambda.csv from an earlier decompose run; when
    /// empty, tv_order computes the basis itself.
    std::filesystem::path basis_dir;

    bool profile = false;
};

/// Resolves the input graph: loads input_path in the requested format, or
/// draws the random graph. Throws InvalidArgumentError when neither an input
/// file nor a random size was given.
SparseShift resolve_input(const ExperimentSpec& spec);

/// Creates the output directory (parents included) and verifies it is a
/// writable directory.
void prepare_output_dir(const ExperimentSpec& spec);

/// Applies the derived fields (inner solver enum, lsqr tolerances) onto a
/// copy of spec.cfg.
SgfaConfig effective_config(const ExperimentSpec& spec);

int cmd_decompose(const ExperimentSpec& spec);
int cmd_sweep_grid(const ExperimentSpec& spec);
int cmd_instability_tails(const ExperimentSpec& spec);
int cmd_left_right(const ExperimentSpec& spec);
int cmd_tv_order(const ExperimentSpec& spec);
int cmd_jordan_check(const ExperimentSpec& spec);
int cmd_epsilon_schur(const ExperimentSpec& spec);

}  // namespace stablegft::cli
