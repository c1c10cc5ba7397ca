#include "experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "stablegft/dense_kernels.hpp"
#include "stablegft/epsilon_schur.hpp"
#include "stablegft/errors.hpp"
#include "stablegft/jordan.hpp"
#include "stablegft/matrix_dump.hpp"
#include "stablegft/metrics.hpp"
#include "stablegft/spectral.hpp"

#include "csv_writer.hpp"
#include "worker_pool.hpp"

namespace stablegft::cli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Inverse error of a basis, or +inf when it cannot be inverted. Keeps
/// reporting alive for iterates past the usable-conditioning range.
double inverse_error_or_inf(const ComplexMatrix& F) {
    try {
        return metrics::inverse_error(F);
    } catch (const SingularMatrixError&) {
        return kInf;
    }
}

std::string termination_name(SgfaTermination t) {
    switch (t) {
        case SgfaTermination::stability_floor_hit: return "stability_floor_hit";
        case SgfaTermination::offdiag_converged: return "offdiag_converged";
        case SgfaTermination::max_outer_reached: return "max_outer_reached";
        case SgfaTermination::initial_schur_returned: return "initial_schur_returned";
    }
    return "unknown";
}

/// Runs the configured mode ("right" or "left") on A.
SgfaResult run_mode(const SparseShift& A, const SgfaConfig& cfg, const std::string& mode,
                    const SgfaObserver& observer = {}) {
    if (mode == "left") return sgfa_run_left(A, cfg, observer);
    return sgfa_run(A, cfg, observer);
}

}  // namespace

SparseShift resolve_input(const ExperimentSpec& spec) {
    if (!spec.input_path.empty()) {
        if (spec.format == "edges") return io::load_edge_list(spec.input_path);
        return io::load_matrix_market(spec.input_path);
    }
    if (spec.random_requested) return io::erdos_renyi(spec.random);
    throw InvalidArgumentError(
        "no input graph: pass --input FILE or describe a random draw with --er-n/--er-p");
}

void prepare_output_dir(const ExperimentSpec& spec) {
    std::filesystem::create_directories(spec.output_dir);
    if (!std::filesystem::is_directory(spec.output_dir))
        throw InvalidArgumentError("output path '" + spec.output_dir.string() +
                                   "' is not a directory");
}

SgfaConfig effective_config(const ExperimentSpec& spec) {
    SgfaConfig cfg = spec.cfg;
    cfg.inner_solver =
        spec.inner == "dense" ? InnerSolver::dense_exact : InnerSolver::matrix_free_lsqr;
    cfg.lsqr.atol = spec.lsqr_tol;
    cfg.lsqr.btol = spec.lsqr_tol;
    return cfg;
}

int cmd_decompose(const ExperimentSpec& spec) {
    const SparseShift A = resolve_input(spec);
    prepare_output_dir(spec);
    const SgfaConfig cfg = effective_config(spec);

    // The history CSV carries per-iterate conditioning and invertibility, so
    // they are measured on every iterate as it appears (including a final
    // rejected one; its row documents why the run stopped).
    struct HistoryRow {
        IterationRecord rec;
        double inverse_error;
    };
    std::vector<HistoryRow> rows;
    const SgfaObserver observer = [&](const IterationRecord& rec, const ComplexMatrix& F,
                                      const ComplexMatrix&) {
        rows.push_back({rec, inverse_error_or_inf(F)});
    };

    const SgfaResult result = run_mode(A, cfg, spec.mode, observer);

    // The left mode approximates eigenvectors of the adjoint shift, so its
    // metrics are taken against that operator.
    const SparseShift measured = spec.mode == "left" ? A.adjoint() : A;
    const metrics::MetricsReport report =
        metrics::MetricsReport::compute(measured, result.F, result.Lambda);

    io::save_matrix(result.F, spec.output_dir / "F.bin");
    io::save_matrix_csv(result.F, spec.output_dir / "F.csv", "basis");
    io::save_signal_csv(result.Lambda, spec.output_dir / "lambda.csv", "eigenvalues");

    {
        std::ofstream out(spec.output_dir / "metrics.json");
        if (!out) throw InvalidArgumentError("cannot open metrics.json for writing");
        out << report.to_json() << "\n";
        out.close();
        if (out.fail()) throw InvalidArgumentError("write to metrics.json failed");
    }

    {
        CsvWriter history(spec.output_dir / "history.csv", "history",
                          "iteration,accuracy,sigma_min,sigma_max,condition,inverse_error,"
                          "offdiag,feasibility,basis_norm,inner_residual,solve_seconds");
        for (const HistoryRow& row : rows) {
            const double kappa =
                row.rec.sigma_min > 0 ? row.rec.sigma_max / row.rec.sigma_min : kInf;
            history.row({std::to_string(row.rec.k), csv_number(row.rec.accuracy),
                         csv_number(row.rec.sigma_min), csv_number(row.rec.sigma_max),
                         csv_number(kappa), csv_number(row.inverse_error),
                         csv_number(row.rec.offdiag), csv_number(row.rec.feasibility),
                         csv_number(row.rec.basis_norm), csv_number(row.rec.inner_residual),
                         csv_number(row.rec.solve_seconds)});
        }
        history.close();
    }

    if (spec.profile) {
        CsvWriter profile(spec.output_dir / "profile.csv", "profile",
                          "iteration,solve_seconds,lsqr_iterations,seconds_per_lsqr_iteration");
        for (const HistoryRow& row : rows) {
            if (row.rec.k == 0) continue;
            const std::int64_t iters = row.rec.lsqr.iterations;
            const double per_iter =
                iters > 0 ? row.rec.solve_seconds / static_cast<double>(iters) : 0.0;
            profile.row({std::to_string(row.rec.k), csv_number(row.rec.solve_seconds),
                         std::to_string(iters), csv_number(per_iter)});
        }
        profile.close();
    }

    std::printf("decompose: %s after %lld updates, accuracy %.6e, sigma_min %.6e\n",
                termination_name(result.termination).c_str(),
                static_cast<long long>(result.iterations_run), report.accuracy,
                report.sigma_min);
    return 0;
}

int cmd_sweep_grid(const ExperimentSpec& spec) {
    const SparseShift A = resolve_input(spec);
    prepare_output_dir(spec);

    // Default grid: six decades of stability floor against fourteen
    // contraction factors, the region where the floor starts to bind.
    std::vector<double> alphas = spec.alpha_grid;
    if (alphas.empty())
        for (int d = -6; d <= -1; ++d) alphas.push_back(std::pow(10.0, d));
    std::vector<double> betas = spec.beta_grid;
    if (betas.empty())
        for (int i = 0; i < 14; ++i) betas.push_back(0.30 + 0.05 * i);

    struct Cell {
        double alpha, beta;
        SgfaTermination termination;
        std::int64_t iterations;
        double accuracy, sigma_min, condition, inverse_error;
    };
    const std::size_t cols = betas.size();
    std::vector<Cell> cells(alphas.size() * cols);

    run_trials(static_cast<std::int64_t>(cells.size()), thread_cap(), [&](std::int64_t idx) {
        const double alpha = alphas[static_cast<std::size_t>(idx) / cols];
        const double beta = betas[static_cast<std::size_t>(idx) % cols];
        SgfaConfig cfg = effective_config(spec);
        cfg.alpha = alpha;
        cfg.beta = beta;
        cfg.track_history = false;
        const SgfaResult result = run_mode(A, cfg, spec.mode);
        const SingularExtremes ext = singular_extremes(result.F);
        cells[static_cast<std::size_t>(idx)] = {
            alpha,
            beta,
            result.termination,
            result.iterations_run,
            metrics::accuracy(spec.mode == "left" ? A.adjoint() : A, result.F, result.Lambda),
            ext.sigma_min,
            ext.sigma_min > 0 ? ext.sigma_max / ext.sigma_min : kInf,
            inverse_error_or_inf(result.F)};
    });

    CsvWriter sweep(spec.output_dir / "sweep.csv", "sweep",
                    "alpha,beta,termination,iterations,accuracy,sigma_min,condition,"
                    "inverse_error,fallback");
    for (const Cell& cell : cells) {
        sweep.row({csv_number(cell.alpha), csv_number(cell.beta),
                   termination_name(cell.termination), std::to_string(cell.iterations),
                   csv_number(cell.accuracy), csv_number(cell.sigma_min),
                   csv_number(cell.condition), csv_number(cell.inverse_error),
                   cell.termination == SgfaTermination::initial_schur_returned ? "1" : "0"});
    }
    sweep.close();
    std::printf("sweep_grid: %zu cells written\n", cells.size());
    return 0;
}

int cmd_instability_tails(const ExperimentSpec& spec) {
    prepare_output_dir(spec);
    if (spec.p_grid.empty())
        throw InvalidArgumentError("instability_tails requires a non-empty --p-grid");
    if (!spec.random_requested)
        throw InvalidArgumentError("instability_tails needs --er-n (the graphs are sampled)");

    CsvWriter tails(spec.output_dir / "tails.csv", "tails",
                    "p,self_loops,trials,singular_count,fraction");
    for (const double p : spec.p_grid) {
        for (const bool self_loops : {false, true}) {
            std::vector<int> singular(static_cast<std::size_t>(spec.trials), 0);
            run_trials(spec.trials, thread_cap(), [&](std::int64_t t) {
                io::RandomGraphSpec draw = spec.random;
                draw.p = p;
                draw.self_loops = self_loops;
                // Decorrelate the two variants and the grid points while
                // keeping every trial reproducible from --seed alone.
                draw.seed = spec.random.seed + 1'000'003 * static_cast<std::uint64_t>(t) +
                            (self_loops ? 500'000'011 : 0) +
                            static_cast<std::uint64_t>(p * 1e6);
                const SparseShift A = io::erdos_renyi(draw);
                const double sigma_min =
                    singular_extremes(dense_eigendecompose(A.dense()).V).sigma_min;
                if (sigma_min <= spec.sigma_threshold) singular[static_cast<std::size_t>(t)] = 1;
            });
            const int count = std::accumulate(singular.begin(), singular.end(), 0);
            tails.row({csv_number(p), self_loops ? "1" : "0", std::to_string(spec.trials),
                       std::to_string(count),
                       csv_number(static_cast<double>(count) / static_cast<double>(spec.trials))});
        }
    }
    tails.close();
    std::printf("instability_tails: %zu p-values x 2 variants x %lld trials\n",
                spec.p_grid.size(), static_cast<long long>(spec.trials));
    return 0;
}

int cmd_left_right(const ExperimentSpec& spec) {
    const SparseShift A = resolve_input(spec);
    prepare_output_dir(spec);
    if (spec.alpha_grid.empty())
        throw InvalidArgumentError("left_right requires a non-empty --alpha-grid");

    struct Row {
        double alpha, accuracy_right, accuracy_left;
        double discrepancy_right, discrepancy_left, discrepancy_mean;
    };
    std::vector<Row> rows(spec.alpha_grid.size());
    const SparseShift A_adj = A.adjoint();

    run_trials(static_cast<std::int64_t>(rows.size()), thread_cap(), [&](std::int64_t idx) {
        SgfaConfig cfg = effective_config(spec);
        cfg.alpha = spec.alpha_grid[static_cast<std::size_t>(idx)];
        cfg.track_history = false;
        const SgfaResult right = sgfa_run(A, cfg);
        const SgfaResult left = sgfa_run_left(A, cfg);
        Row row;
        row.alpha = cfg.alpha;
        row.accuracy_right = metrics::accuracy(A, right.F, right.Lambda);
        row.accuracy_left = metrics::accuracy(A_adj, left.F, left.Lambda);
        try {
            const metrics::LrDiscrepancy d = metrics::lr_discrepancy(right.F, left.F);
            row.discrepancy_right = d.right_error;
            row.discrepancy_left = d.left_error;
            row.discrepancy_mean = d.mean;
        } catch (const SingularMatrixError&) {
            row.discrepancy_right = row.discrepancy_left = row.discrepancy_mean = kInf;
        }
        rows[static_cast<std::size_t>(idx)] = row;
    });

    CsvWriter out(spec.output_dir / "left_right.csv", "left_right",
                  "alpha,accuracy_right,accuracy_left,discrepancy_right,discrepancy_left,"
                  "discrepancy_mean");
    for (const Row& row : rows) {
        out.row({csv_number(row.alpha), csv_number(row.accuracy_right),
                 csv_number(row.accuracy_left), csv_number(row.discrepancy_right),
                 csv_number(row.discrepancy_left), csv_number(row.discrepancy_mean)});
    }
    out.close();
    std::printf("left_right: %zu alpha values written\n", rows.size());
    return 0;
}

int cmd_tv_order(const ExperimentSpec& spec) {
    const SparseShift A = resolve_input(spec);
    prepare_output_dir(spec);

    ComplexMatrix F;
    ComplexVector Lambda;
    if (!spec.basis_dir.empty()) {
        F = io::load_matrix(spec.basis_dir / "F.bin");
        Lambda = io::load_signal_csv(spec.basis_dir / "lambda.csv");
    } else {
        const SgfaResult result = run_mode(A, effective_config(spec), spec.mode);
        F = result.F;
        Lambda = result.Lambda;
    }
    const spectral::SpectralBasis basis(std::move(F), std::move(Lambda), A);

    const std::vector<Index>& order = basis.tv_order();
    if (order.empty())
        throw InvalidArgumentError(
            "tv_order: the spectrum is all zeros, so total variation is undefined");

    CsvWriter tv(spec.output_dir / "tv.csv", "tv",
                 "rank,column,tv,lambda_re,lambda_im");
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        const Index col = order[rank];
        const double value = spectral::total_variation(basis, A, basis.F().col(col));
        tv.row({std::to_string(rank), std::to_string(col), csv_number(value),
                csv_number(basis.Lambda()(col).real()), csv_number(basis.Lambda()(col).imag())});
    }
    tv.close();

    // Per-node magnitudes of the selected ranks, for heat-map style plots of
    // where each frequency component lives on the graph.
    std::vector<std::int64_t> ranks = spec.ranks;
    if (ranks.empty())
        for (std::int64_t r = 0; r < std::min<std::int64_t>(4, basis.n()); ++r)
            ranks.push_back(r);
    std::string header = "node";
    for (const std::int64_t r : ranks) {
        if (r < 0 || r >= static_cast<std::int64_t>(order.size()))
            throw InvalidArgumentError("tv_order: rank " + std::to_string(r) +
                                       " outside 0.." + std::to_string(order.size() - 1));
        header += ",mag_rank" + std::to_string(r);
    }
    CsvWriter mags(spec.output_dir / "magnitudes.csv", "magnitudes", header);
    for (Index node = 0; node < basis.n(); ++node) {
        std::vector<std::string> cells{std::to_string(node)};
        for (const std::int64_t r : ranks)
            cells.push_back(
                csv_number(std::abs(basis.F()(node, order[static_cast<std::size_t>(r)]))));
        mags.row(cells);
    }
    mags.close();

    std::printf("tv_order: %zu components, %zu ranks detailed\n", order.size(), ranks.size());
    return 0;
}

int cmd_jordan_check(const ExperimentSpec& spec) {
    prepare_output_dir(spec);
    if (spec.jordan_n < 2)
        throw InvalidArgumentError("jordan_check requires --jordan-n >= 2");

    SgfaConfig cfg = effective_config(spec);
    // The closed forms assume the iteration keeps running, so the stability
    // floor and the off-diagonal exit are parked out of the way; --max-outer
    // picks how many closed-form iterates to compare.
    cfg.alpha = std::min(cfg.alpha, 1e-150);
    cfg.offdiag_tol = 0.0;
    cfg.inner_solver = InnerSolver::dense_exact;

    struct Row {
        std::int64_t k;
        double sigma_min_run, sigma_min_closed;
        double accuracy_run, accuracy_closed;
        double gamma_closed, max_entry_gap;
    };
    std::vector<Row> rows;
    const SgfaObserver observer = [&](const IterationRecord& rec, const ComplexMatrix& F,
                                      const ComplexMatrix&) {
        const JordanOracle oracle = jordan_oracle(spec.jordan_n, cfg.beta, rec.k);
        rows.push_back({rec.k, rec.sigma_min, oracle.sigma_min_closed, rec.accuracy,
                        std::sqrt(oracle.accuracy_sq_closed), oracle.gamma_k,
                        (F - oracle.F_k_closed).cwiseAbs().maxCoeff()});
    };
    sgfa_run(jordan_block_shift(spec.jordan_n), cfg, observer);

    CsvWriter out(spec.output_dir / "jordan.csv", "jordan",
                  "k,sigma_min_run,sigma_min_closed,accuracy_run,accuracy_closed,"
                  "gamma_closed,max_entry_gap");
    for (const Row& row : rows) {
        out.row({std::to_string(row.k), csv_number(row.sigma_min_run),
                 csv_number(row.sigma_min_closed), csv_number(row.accuracy_run),
                 csv_number(row.accuracy_closed), csv_number(row.gamma_closed),
                 csv_number(row.max_entry_gap)});
    }
    out.close();
    std::printf("jordan_check: n=%lld, %zu iterates compared\n",
                static_cast<long long>(spec.jordan_n), rows.size());
    return 0;
}

int cmd_epsilon_schur(const ExperimentSpec& spec) {
    const SparseShift A = resolve_input(spec);
    prepare_output_dir(spec);
    if (spec.eps_grid.empty())
        throw InvalidArgumentError("epsilon_schur requires a non-empty --eps-grid");

    CsvWriter out(spec.output_dir / "epsilon.csv", "epsilon",
                  "epsilon,sigma_min,sigma_bound,max_offdiag,condition,reconstruction_error");
    for (const double eps : spec.eps_grid) {
        const EpsilonSchur es = epsilon_schur(A, eps);
        const Index n = A.n();
        double max_off = 0.0;
        for (Index j = 0; j < n; ++j)
            for (Index i = 0; i < j; ++i) max_off = std::max(max_off, std::abs(es.T_eps(i, j)));
        const SingularExtremes ext = singular_extremes(es.F_eps);
        const double kappa = ext.sigma_min > 0 ? ext.sigma_max / ext.sigma_min : kInf;
        double recon = kInf;
        try {
            recon = frobenius(A.dense() - es.F_eps * es.T_eps * invert(es.F_eps));
        } catch (const SingularMatrixError&) {
            // not invertible at working precision; inf documents that
        }
        out.row({csv_number(eps), csv_number(ext.sigma_min),
                 csv_number(std::pow(eps, static_cast<double>(n - 1))), csv_number(max_off),
                 csv_number(kappa), csv_number(recon)});
    }
    out.close();
    std::printf("epsilon_schur: %zu epsilon values written\n", spec.eps_grid.size());
    return 0;
}

}  // namespace stablegft::cli
