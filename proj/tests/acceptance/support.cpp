#include "support.hpp"

#include <cstdio>
#include <utility>

#include "stablegft/graph_io.hpp"

namespace acceptance {

Criterion::Criterion(int number, std::string name) : number_(number), name_(std::move(name)) {}

void Criterion::require(bool condition, const std::string& detail) {
    ++checks_;
    if (!condition) failures_.push_back(detail);
}

void Criterion::note(const std::string& detail) { notes_.push_back(detail); }

bool Criterion::finish() const {
    std::printf("[acceptance] C%d %s: %s\n", number_, name_.c_str(), passed() ? "PASS" : "FAIL");
    std::printf("[acceptance]   checks: %zu, failed: %zu\n", checks_, failures_.size());
    for (const auto& n : notes_) std::printf("[acceptance]   note: %s\n", n.c_str());
    const std::size_t shown = failures_.size() < 12 ? failures_.size() : 12;
    for (std::size_t i = 0; i < shown; ++i)
        std::printf("[acceptance]   failed: %s\n", failures_[i].c_str());
    if (shown < failures_.size())
        std::printf("[acceptance]   ... %zu more failures\n", failures_.size() - shown);
    std::fflush(stdout);
    return passed();
}

void Criterion::skip(const std::string& notice) const {
    std::printf("[acceptance] C%d %s: SKIP (%s)\n", number_, name_.c_str(), notice.c_str());
    std::fflush(stdout);
}

const stablegft::SgfaConfig& ensemble_config() {
    static const stablegft::SgfaConfig cfg = [] {
        stablegft::SgfaConfig c;
        c.alpha = 1e-6;
        c.beta = 0.5;
        c.max_outer = 6;
        c.offdiag_tol = 1e-14;
        c.inner_solver = stablegft::InnerSolver::dense_exact;
        // A handful of seeds have eigenvalue near-collisions (gaps around
        // 1e-8) that push genuine operator directions down to 3e-14 relative,
        // while the structural null cluster stays below 4e-15. The default
        // cutoff of 1e-10 would truncate those directions and leave inner
        // residuals near 5e-10; this value keeps them in the solve, and
        // whatever remains below it contributes at most about 1e-12 residual.
        c.dense_rank_threshold = 1e-13;
        c.track_history = true;
        return c;
    }();
    return cfg;
}

const std::vector<EnsembleInstance>& shared_ensemble() {
    static const std::vector<EnsembleInstance> instances = [] {
        std::vector<EnsembleInstance> out;
        out.reserve(50);
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            stablegft::io::RandomGraphSpec spec;
            spec.n = 30;
            spec.p = 0.1;
            spec.seed = seed;
            stablegft::SparseShift A = stablegft::io::erdos_renyi(spec);
            stablegft::SgfaResult result = stablegft::sgfa_run(A, ensemble_config());
            out.push_back(EnsembleInstance{std::move(A), std::move(result)});
        }
        return out;
    }();
    return instances;
}

}  // namespace acceptance
