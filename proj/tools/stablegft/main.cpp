#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stablegft/errors.hpp"

#include "experiment.hpp"
#include "mixed_config.hpp"

namespace {

using stablegft::cli::ExperimentSpec;

std::string error_type(const std::exception& e) {
    if (dynamic_cast<const stablegft::InvalidArgumentError*>(&e)) return "invalid_argument";
    if (dynamic_cast<const stablegft::SingularMatrixError*>(&e)) return "singular_matrix";
    if (dynamic_cast<const stablegft::ConvergenceError*>(&e)) return "convergence";
    if (dynamic_cast<const stablegft::ParseError*>(&e)) return "parse";
    if (dynamic_cast<const stablegft::OverflowError*>(&e)) return "overflow";
    if (dynamic_cast<const stablegft::Error*>(&e)) return "error";
    return "unexpected";
}

/// Options shared by every command: output directory, run configuration,
/// and the inner-solver knobs.
void add_run_options(CLI::App* cmd, ExperimentSpec& spec) {
    // Lets --config (defined on the main app) appear after the command name.
    cmd->fallthrough();
    cmd->add_option("--out", spec.output_dir, "Directory for result files")
        ->capture_default_str();
    cmd->add_option("--alpha", spec.cfg.alpha, "Stability floor on sigma_min(F)")
        ->capture_default_str();
    cmd->add_option("--beta", spec.cfg.beta, "Off-diagonal contraction factor per iteration")
        ->capture_default_str();
    cmd->add_option("--max-outer", spec.cfg.max_outer, "Outer iteration budget")
        ->capture_default_str();
    cmd->add_option("--offdiag-tol", spec.cfg.offdiag_tol,
                    "Relative off-diagonal mass that counts as converged")
        ->capture_default_str();
    cmd->add_option("--inner", spec.inner, "Inner least-squares solver")
        ->check(CLI::IsMember({"lsqr", "dense"}))
        ->capture_default_str();
    cmd->add_option("--lsqr-iters", spec.cfg.lsqr.max_iters, "Inner solver iteration cap")
        ->capture_default_str();
    cmd->add_option("--lsqr-tol", spec.lsqr_tol, "Inner solver stopping tolerance (atol and btol)")
        ->capture_default_str();
    cmd->add_option("--seed", spec.random.seed, "Seed for every random draw in the run")
        ->capture_default_str();
}

/// Input-graph options for commands that decompose a single shift: a file in
/// one of the supported formats, or an Erdos-Renyi draw.
void add_input_options(CLI::App* cmd, ExperimentSpec& spec) {
    auto* input = cmd->add_option("--input", spec.input_path,
                                  "Graph file to load instead of sampling")
                      ->check(CLI::ExistingFile);
    cmd->add_option("--format", spec.format, "Input file format")
        ->check(CLI::IsMember({"mm", "edges"}))
        ->capture_default_str();
    auto* er_n = cmd->add_option("--er-n", spec.random.n, "Random graph size")
                     ->each([&spec](const std::string&) { spec.random_requested = true; });
    cmd->add_option("--er-p", spec.random.p, "Random graph edge probability")
        ->capture_default_str();
    cmd->add_flag("--er-self-loops", spec.random.self_loops, "Allow i -> i edges in the draw");
    input->excludes(er_n);
}

void add_mode_option(CLI::App* cmd, ExperimentSpec& spec) {
    cmd->add_option("--mode", spec.mode,
                    "Which eigenvector family to approximate (left works on the adjoint)")
        ->check(CLI::IsMember({"right", "left"}))
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stable spectral decompositions of directed graph shifts"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "TOML or JSON file with one section per command mirroring its flags; "
                   "command-line flags win on conflict");
    app.config_formatter(std::make_shared<stablegft::cli::MixedConfig>());

    ExperimentSpec spec;
    // The library default of p = 0 would make a bare --er-n draw an empty
    // graph; the canonical sparse regime is a friendlier starting point.
    spec.random.p = 0.1;
    std::function<int()> run;

    auto* decompose =
        app.add_subcommand("decompose", "Run the stable decomposition on one shift and dump "
                                        "basis, spectrum, metrics, and per-iteration history");
    add_run_options(decompose, spec);
    add_input_options(decompose, spec);
    add_mode_option(decompose, spec);
    decompose->add_flag("--profile", spec.profile,
                        "Also write per-iteration wall-clock timings");
    decompose->callback([&] { run = [&] { return stablegft::cli::cmd_decompose(spec); }; });

    auto* sweep = app.add_subcommand(
        "sweep_grid", "Decompose one shift across an (alpha, beta) grid and tabulate "
                      "accuracy, conditioning, and fallbacks per cell");
    add_run_options(sweep, spec);
    add_input_options(sweep, spec);
    add_mode_option(sweep, spec);
    sweep->add_option("--alpha-grid", spec.alpha_grid, "Stability floors to sweep")
        ->expected(-1);
    sweep->add_option("--beta-grid", spec.beta_grid, "Contraction factors to sweep")
        ->expected(-1);
    sweep->callback([&] { run = [&] { return stablegft::cli::cmd_sweep_grid(spec); }; });

    auto* tails = app.add_subcommand(
        "instability_tails", "Measure how often the plain dense eigenbasis of random shifts "
                             "is numerically singular, per edge probability");
    add_run_options(tails, spec);
    tails->add_option("--er-n", spec.random.n, "Random graph size")
        ->each([&spec](const std::string&) { spec.random_requested = true; });
    tails->add_option("--trials", spec.trials, "Graphs to sample per grid point and variant")
        ->capture_default_str();
    tails->add_option("--p-grid", spec.p_grid, "Edge probabilities to sweep")->expected(-1);
    tails->add_option("--sigma-threshold", spec.sigma_threshold,
                      "sigma_min at or below this counts as singular")
        ->capture_default_str();
    tails->callback([&] { run = [&] { return stablegft::cli::cmd_instability_tails(spec); }; });

    auto* leftright = app.add_subcommand(
        "left_right", "Compare right and left decompositions of one shift across stability "
                      "floors at a fixed contraction factor");
    add_run_options(leftright, spec);
    add_input_options(leftright, spec);
    leftright->add_option("--alpha-grid", spec.alpha_grid, "Stability floors to sweep")
        ->expected(-1);
    leftright->callback([&] { run = [&] { return stablegft::cli::cmd_left_right(spec); }; });

    auto* tv = app.add_subcommand(
        "tv_order", "Rank basis components by total variation and dump per-node magnitudes "
                    "for selected ranks");
    add_run_options(tv, spec);
    add_input_options(tv, spec);
    add_mode_option(tv, spec);
    tv->add_option("--basis", spec.basis_dir,
                   "Directory holding F.bin and lambda.csv from an earlier decompose run; "
                   "when omitted the basis is computed here")
        ->check(CLI::ExistingDirectory);
    tv->add_option("--ranks", spec.ranks, "TV ranks whose per-node magnitudes to tabulate")
        ->expected(-1);
    tv->callback([&] { run = [&] { return stablegft::cli::cmd_tv_order(spec); }; });

    auto* jordan = app.add_subcommand(
        "jordan_check", "Compare the iteration on a shift-by-one chain against its closed "
                        "forms, iterate by iterate");
    add_run_options(jordan, spec);
    jordan->add_option("--jordan-n", spec.jordan_n, "Chain length")->capture_default_str();
    jordan->callback([&] { run = [&] { return stablegft::cli::cmd_jordan_check(spec); }; });

    auto* eps = app.add_subcommand(
        "epsilon_schur", "Sweep the diagonally rescaled Schur construction over epsilon and "
                         "tabulate the conditioning trade-off");
    add_run_options(eps, spec);
    add_input_options(eps, spec);
    eps->add_option("--eps-grid", spec.eps_grid, "Off-diagonal ceilings to sweep")
        ->expected(-1);
    eps->callback([&] { run = [&] { return stablegft::cli::cmd_epsilon_schur(spec); }; });

    CLI11_PARSE(app, argc, argv);

    try {
        return run();
    } catch (const std::exception& e) {
        const nlohmann::json report = {
            {"error", {{"type", error_type(e)}, {"message", e.what()}}}};
        std::fprintf(stderr, "%s\n", report.dump().c_str());
        return 1;
    }
}
