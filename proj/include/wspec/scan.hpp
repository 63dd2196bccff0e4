#pragma once

#include <cstdint>
#include <vector>

#include "wspec/graph.hpp"
#include "wspec/matrix.hpp"
#include "wspec/prng.hpp"
#include "wspec/weights.hpp"

namespace wspec {

// Any rho that reaches a report must agree between the two eigensolver paths
// within this relative tolerance.
inline constexpr double kSolverAgreementTol = 1e-9;
// Strict-increase margin for the monotonicity checks.
inline constexpr double kStrictGap = 1e-10;

// rho by Jacobi, cross-checked against shifted power iteration whenever the
// support is connected (power iteration refuses reducible matrices, and a
// near-degenerate dominant pair can exhaust its iteration budget; both fall
// back to the Jacobi value alone). Updates *worst_gap with the largest
// relative disagreement seen; throws if the two paths disagree beyond
// kSolverAgreementTol.
double cross_checked_radius(const SymMatrix& m, double* worst_gap = nullptr);

struct SpectraScan {
    std::vector<double> rho;      // indexed like the input
    double max_solver_gap = 0.0;  // worst Jacobi/power relative disagreement
};

// rho(A_f(T)) for each tree. The OpenMP kernel fills a preallocated slot per
// input, so results are identical to the serial reference bit for bit and
// independent of thread count. jobs: 1 = serial reference, 0 = OpenMP default,
// k > 1 = k threads.
SpectraScan tree_spectra_serial(const std::vector<Graph>& trees, const WeightFunction& f);
SpectraScan tree_spectra(const std::vector<Graph>& trees, const WeightFunction& f,
                         int jobs = 0);

struct KelmansTrial {
    long long index = 0;
    char kind = 'e';  // 'e' Erdos-Renyi | 't' random tree
    int n = 0;
    int v1 = 0, v2 = 0;
    bool trivial = false;
    bool connected_after = true;
    double rho_before = 0.0, rho_after = 0.0;
    double solver_gap = 0.0;
};

// Seeded Kelmans monotonicity trials; trial i draws from SplitMix64(seed)
// .split(i), so the rows are reproducible under any parallel schedule.
std::vector<KelmansTrial> kelmans_trials_serial(const WeightFunction& f, int n,
                                                int trials, std::uint64_t seed);
std::vector<KelmansTrial> kelmans_trials(const WeightFunction& f, int n, int trials,
                                         std::uint64_t seed, int jobs = 0);

// Samplers shared by the trials and the property tests.
// Erdos-Renyi with p uniform in [ln n/n, 0.6], redrawn until connected
// (at most 100 attempts).
Graph random_connected_graph(int n, SplitMix64& rng);
// Uniform over labeled trees via a random Prüfer sequence.
Graph random_tree(int n, SplitMix64& rng);

}  // namespace wspec
