#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "stablegft/dense_kernels.hpp"
#include "stablegft/graph_io.hpp"
#include "stablegft/lsqr.hpp"
#include "stablegft/schur.hpp"
#include "stablegft/sgfa.hpp"
#include "stablegft/sparse_shift.hpp"
#include "stablegft/sylvester.hpp"
#include "stablegft/types.hpp"

namespace {

using namespace stablegft;

SparseShift random_shift(Index n, double p, std::uint64_t seed) {
    io::RandomGraphSpec spec;
    spec.n = n;
    spec.p = p;
    spec.seed = seed;
    return io::erdos_renyi(spec);
}

ComplexMatrix random_basis(Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    ComplexMatrix F(n, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) F(i, j) = Complex(gauss(rng), gauss(rng));
    return F;
}

/// One prepared basis-update system: operator plus right-hand side.
struct Step {
    SparseShift A;
    ComplexMatrix T;
    ComplexMatrix F;
    ComplexVector b;

    explicit Step(Index n) : A(random_shift(n, 0.1, 7)), F(random_basis(n, 11)) {
        T = contract(schur(A).T, 0.5);
        b = vec(F * T - A.matrix() * F);
    }
};

void BM_sylvester_apply(benchmark::State& state) {
    const Index n = state.range(0);
    const Step step(n);
    const SylvesterOperator op(step.A, step.T);
    ComplexVector x = vec(step.F);
    for (auto _ : state) benchmark::DoNotOptimize(op.apply(x));
    state.SetComplexityN(n);
}
BENCHMARK(BM_sylvester_apply)->Arg(30)->Arg(100)->Arg(200)->Complexity();

void BM_sylvester_apply_adjoint(benchmark::State& state) {
    const Index n = state.range(0);
    const Step step(n);
    const SylvesterOperator op(step.A, step.T);
    ComplexVector y = vec(step.F);
    for (auto _ : state) benchmark::DoNotOptimize(op.apply_adjoint(y));
    state.SetComplexityN(n);
}
BENCHMARK(BM_sylvester_apply_adjoint)->Arg(30)->Arg(100)->Arg(200)->Complexity();

void BM_lsqr_solve(benchmark::State& state) {
    const Index n = state.range(0);
    const Step step(n);
    const SylvesterOperator op(step.A, step.T);
    LsqrSettings settings;
    settings.max_iters = 50;
    for (auto _ : state) benchmark::DoNotOptimize(lsqr_min_norm(op, step.b, settings));
}
BENCHMARK(BM_lsqr_solve)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_schur(benchmark::State& state) {
    const Index n = state.range(0);
    const SparseShift A = random_shift(n, 0.1, 7);
    for (auto _ : state) benchmark::DoNotOptimize(schur(A));
    state.SetComplexityN(n);
}
BENCHMARK(BM_schur)->Arg(30)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->Complexity();

void BM_singular_extremes(benchmark::State& state) {
    const Index n = state.range(0);
    const ComplexMatrix F = random_basis(n, 13);
    for (auto _ : state) benchmark::DoNotOptimize(singular_extremes(F));
}
BENCHMARK(BM_singular_extremes)->Arg(30)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_sgfa_iteration(benchmark::State& state) {
    const Index n = state.range(0);
    const SparseShift A = random_shift(n, 0.1, 7);
    SgfaConfig cfg;
    cfg.max_outer = 1;
    cfg.offdiag_tol = 0.0;
    cfg.track_history = false;
    for (auto _ : state) benchmark::DoNotOptimize(sgfa_run(A, cfg));
}
BENCHMARK(BM_sgfa_iteration)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
