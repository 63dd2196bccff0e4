#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wspec/report.hpp"
#include "wspec/weights.hpp"

namespace wspec {

// Reproduces the paper's 5x7 grid of double-star/star spectral radii for the
// five increasing+convex-but-not-restricted weights, checks every cell against
// the published value within +-0.1 and the per-row maximum against the
// published boldface column.
ExperimentReport run_table1();

// Exhaustive rho scan over all free trees of each order in [n_lo, n_hi]:
// argmin must be P_n and argmax S_n, each with a strict uniqueness margin.
// Non-restricted weights are scanned anyway (their failures are the expected
// negative cases and yield verdict expected-fail).
ExperimentReport run_extremal_scan(const WeightFunction& f, int n_lo, int n_hi,
                                   int jobs = 0);

// Seeded random Kelmans applications: nontrivial ones must strictly increase
// rho, trivial ones must leave it unchanged.
ExperimentReport run_kelmans_check(const WeightFunction& f, int n, int trials,
                                   std::uint64_t seed, int jobs = 0);

// rho along [S_{floor(n/2),...}, ..., S_{2,n-2}, S_n]: strictly increasing,
// and every value matches the quartic/star closed form within 1e-8 relative.
ExperimentReport run_double_star_chain(const WeightFunction& f, int n);

// rho(A_f(P_n)) <= 2 f(2,2) cos(pi/(n+1)) for n = 3..n_hi, plus the star
// anchor rho(A_f(S_5)) = 2 f(1,4).
ExperimentReport run_path_bounds(const WeightFunction& f, int n_hi);

// Catalog lookup by name (applying --alpha/--p where they belong), "unit" for
// f = 1, otherwise parsed as an arithmetic expression in x and y.
WeightFunction resolve_weight(const std::string& name_or_expr,
                              std::optional<double> alpha = {},
                              std::optional<double> p = {});

}  // namespace wspec
