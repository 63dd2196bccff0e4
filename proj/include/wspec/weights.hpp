#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wspec/graph.hpp"

namespace wspec {

// Default grid bound for the discrete property checkers; covers every
// desk-scale experiment (n <= 50) with margin.
inline constexpr int kDefaultGridBound = 50;
// Tolerance absorbing floating-point noise in >= comparisons (p-th roots etc).
inline constexpr double kPropertyTol = 1e-12;

// A named symmetric positive weight on degree pairs. Property flags are the
// *declared* classification; the checkers below recompute them on the integer
// grid so declared and computed flags can be cross-checked.
struct WeightFunction {
    std::string name;
    std::optional<double> alpha;  // general sum-connectivity exponent
    std::optional<double> p;      // p-Sombor exponent
    std::function<double(double, double)> fn;
    bool increasing = false;
    bool convex = false;
    bool restricted = false;

    // f(x,y) for x,y > 0; throws std::domain_error on nonpositive arguments.
    double eval(double x, double y) const;
    std::string display_name() const;  // name plus parameters, if any
};

WeightFunction first_zagreb();                        // x+y
WeightFunction first_hyper_zagreb();                  // (x+y)^2
WeightFunction general_sum_connectivity(double alpha);  // (x+y)^alpha, alpha >= 1
WeightFunction forgotten();                           // x^2+y^2
WeightFunction sombor();                              // sqrt(x^2+y^2)
WeightFunction p_sombor(double p);                    // (x^p+y^p)^(1/p), p >= 1
WeightFunction second_zagreb();                       // xy
WeightFunction second_hyper_zagreb();                 // (xy)^2
WeightFunction first_gourava();                       // x+y+xy
WeightFunction second_gourava();                      // (x+y)xy
WeightFunction first_hyper_gourava();                 // (x+y+xy)^2

// f = 1: reduces A_f(G) to the ordinary adjacency matrix.
WeightFunction unit_weight();

// The paper's eleven functions: six restricted (alpha=2, p=2 defaults for the
// parametric two), then five increasing+convex but not restricted.
std::vector<WeightFunction> catalog();

struct GridPoint {
    int x = 0, y = 0;
};

struct PropertyVerdict {
    bool pass = true;
    GridPoint a;            // violating point, or the more imbalanced split
    GridPoint b;            // the second split (restricted / property P only)
    bool has_pair = false;  // whether b is meaningful
    std::string describe() const;  // "pass", "fail(x,y)" or "fail(x1,y1|x2,y2)"
};

// f(x,y) == f(y,x) on the grid, within 1e-14 relative.
PropertyVerdict check_symmetric(const WeightFunction& f, int delta = kDefaultGridBound);
// f(x+1,y) >= f(x,y) for 1 <= x < delta, 1 <= y <= delta.
PropertyVerdict check_increasing(const WeightFunction& f, int delta = kDefaultGridBound);
// Second difference f(x+1,y) - 2f(x,y) + f(x-1,y) >= -tol for 2 <= x <= delta-1.
PropertyVerdict check_convex(const WeightFunction& f, int delta = kDefaultGridBound);
// For every integer sum s <= 2*delta, the more imbalanced split of s has
// f-value >= the less imbalanced one (non-strict).
PropertyVerdict check_restricted(const WeightFunction& f, int delta = kDefaultGridBound);
// Strict-inequality variant of check_restricted (Hu et al.'s property P).
PropertyVerdict check_property_p(const WeightFunction& f, int delta = kDefaultGridBound);

// TI_f(G): sum of f over edges, weighted by endpoint degrees.
double topological_index(const Graph& g, const WeightFunction& f);

}  // namespace wspec
