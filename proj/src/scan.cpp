#include "wspec/scan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wspec/spectral.hpp"
#include "wspec/transforms.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wspec {

double cross_checked_radius(const SymMatrix& m, double* worst_gap) {
    double rho = spectral_radius(m);
    if (m.irreducible()) {
        try {
            double rho_power = principal_eigenvector(m).radius;
            double gap = std::abs(rho - rho_power) / std::max(1.0, std::abs(rho));
            if (gap > kSolverAgreementTol)
                throw std::runtime_error("eigensolver disagreement: Jacobi " +
                                         std::to_string(rho) + " vs power " +
                                         std::to_string(rho_power));
            if (worst_gap) *worst_gap = std::max(*worst_gap, gap);
        } catch (const ConvergenceError&) {
            // the two largest eigenvalues are too close for the iteration
            // budget to separate (long path joining two near-identical
            // brooms); Jacobi alone stands for this fixture
        }
    }
    return rho;
}

SpectraScan tree_spectra_serial(const std::vector<Graph>& trees, const WeightFunction& f) {
    SpectraScan out;
    out.rho.resize(trees.size());
    for (std::size_t i = 0; i < trees.size(); ++i)
        out.rho[i] = cross_checked_radius(build_weighted_adjacency(trees[i], f),
                                          &out.max_solver_gap);
    return out;
}

SpectraScan tree_spectra(const std::vector<Graph>& trees, const WeightFunction& f,
                         int jobs) {
    if (jobs == 1) return tree_spectra_serial(trees, f);
    SpectraScan out;
    out.rho.resize(trees.size());
    const long long count = static_cast<long long>(trees.size());
    bool failed = false;
    std::string error;

#ifdef _OPENMP
    if (jobs > 1) omp_set_num_threads(jobs);
#endif
#pragma omp parallel
    {
        double local_gap = 0.0;
#pragma omp for schedule(dynamic, 16)
        for (long long i = 0; i < count; ++i) {
            try {
                out.rho[i] = cross_checked_radius(
                    build_weighted_adjacency(trees[i], f), &local_gap);
            } catch (const std::exception& e) {
#pragma omp critical
                {
                    failed = true;
                    error = e.what();
                }
            }
        }
#pragma omp critical
        out.max_solver_gap = std::max(out.max_solver_gap, local_gap);
    }
    if (failed) throw std::runtime_error(error);
    return out;
}

Graph random_tree(int n, SplitMix64& rng) {
    if (n == 1) return Graph(1);
    if (n == 2) return path(2);
    // decode a random Prüfer sequence
    std::vector<int> seq(static_cast<std::size_t>(n) - 2);
    for (int& s : seq) s = static_cast<int>(rng.next_below(n));
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++deg[s];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    int leaf = -1, ptr = 0;
    for (int s : seq) {
        if (leaf < 0) {
            while (deg[ptr] != 1 || used[ptr]) ++ptr;
            leaf = ptr;
        }
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        used[leaf] = 1;
        leaf = (--deg[s] == 1 && s < ptr) ? s : -1;
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[v] && deg[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph random_connected_graph(int n, SplitMix64& rng) {
    if (n == 1) return Graph(1);
    const double lo = std::log(double(n)) / n;
    for (int attempt = 0; attempt < 100; ++attempt) {
        double p = lo + rng.next_double() * (0.6 - lo);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_double() < p) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("could not sample a connected graph in 100 attempts");
}

namespace {

KelmansTrial run_trial(const WeightFunction& f, int n, long long index,
                       std::uint64_t seed) {
    SplitMix64 rng = SplitMix64(seed).split(static_cast<std::uint64_t>(index));
    KelmansTrial t;
    t.index = index;
    t.n = n;
    t.kind = (index % 2 == 0) ? 'e' : 't';
    Graph g = (t.kind == 'e') ? random_connected_graph(n, rng) : random_tree(n, rng);
    t.v1 = static_cast<int>(rng.next_below(n));
    t.v2 = static_cast<int>(rng.next_below(n - 1));
    if (t.v2 >= t.v1) ++t.v2;
    t.trivial = is_kelmans_trivial(g, t.v1, t.v2);
    Graph moved = kelmans(g, t.v1, t.v2);
    t.connected_after = moved.is_connected();
    t.rho_before = cross_checked_radius(build_weighted_adjacency(g, f), &t.solver_gap);
    // the moved graph may be disconnected; Jacobi handles it directly and the
    // cross-check skips the power path on reducible input
    t.rho_after =
        cross_checked_radius(build_weighted_adjacency(moved, f), &t.solver_gap);
    return t;
}

}  // namespace

std::vector<KelmansTrial> kelmans_trials_serial(const WeightFunction& f, int n,
                                                int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("kelmans_trials needs trials >= 1");
    if (n < 3) throw std::invalid_argument("kelmans_trials needs n >= 3");
    std::vector<KelmansTrial> out(static_cast<std::size_t>(trials));
    for (long long i = 0; i < trials; ++i) out[i] = run_trial(f, n, i, seed);
    return out;
}

std::vector<KelmansTrial> kelmans_trials(const WeightFunction& f, int n, int trials,
                                         std::uint64_t seed, int jobs) {
    if (jobs == 1) return kelmans_trials_serial(f, n, trials, seed);
    if (trials < 1) throw std::invalid_argument("kelmans_trials needs trials >= 1");
    if (n < 3) throw std::invalid_argument("kelmans_trials needs n >= 3");
    std::vector<KelmansTrial> out(static_cast<std::size_t>(trials));
    bool failed = false;
    std::string error;
#ifdef _OPENMP
    if (jobs > 1) omp_set_num_threads(jobs);
#endif
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < trials; ++i) {
        try {
            out[i] = run_trial(f, n, i, seed);
        } catch (const std::exception& e) {
#pragma omp critical
            {
                failed = true;
                error = e.what();
            }
        }
    }
    if (failed) throw std::runtime_error(error);
    return out;
}

}  // namespace wspec
