#pragma once

#include <stdexcept>
#include <vector>

#include "wspec/graph.hpp"
#include "wspec/matrix.hpp"
#include "wspec/weights.hpp"

namespace wspec {

// Jacobi sweeps stop when the off-diagonal Frobenius norm drops below this
// multiple of ||M||_F.
inline constexpr double kJacobiTol = 1e-13;
// Power iteration: Rayleigh-quotient stagnation threshold and residual bound.
inline constexpr double kPowerRqTol = 1e-13;
inline constexpr double kPowerResidualTol = 1e-10;
inline constexpr int kPowerMaxIterations = 100000;
inline constexpr double kEquitableTol = 1e-9;

struct ReducibleMatrixError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A_f(G): entry (i,j) is f(d_i,d_j) on edges, 0 elsewhere (zero diagonal).
// Throws std::domain_error if f is not finite and positive at a needed pair.
SymMatrix build_weighted_adjacency(const Graph& g, const WeightFunction& f);

// All n eigenvalues, descending, by cyclic Jacobi rotations.
std::vector<double> eigen_spectrum(const SymMatrix& m);

// max |lambda_i|. For nonnegative matrices this equals the largest eigenvalue,
// which is asserted internally.
double spectral_radius(const SymMatrix& m);

struct SpectralResult {
    double radius = 0.0;
    std::vector<double> eigenvector;  // unit 2-norm, all entries positive
    int iterations = 0;
    double residual = 0.0;  // ||M x - radius x||_2
};

// Principal eigenpair by power iteration on M + sigma*I with sigma = max row
// sum; the shift breaks the +-rho degeneracy of bipartite graphs. Requires a
// nonnegative irreducible matrix (connected support) so the eigenvector is
// positive; refuses reducible input.
SpectralResult principal_eigenvector(const SymMatrix& m);

// x^T M x for a unit vector x (2-norm within 1e-9 of 1).
double rayleigh(const SymMatrix& m, const std::vector<double>& x);

// Ordered blocks of vertex indices: disjoint, covering, no empty block.
struct Partition {
    std::vector<std::vector<int>> blocks;
};

void validate_partition(const Partition& p, int n);

// True iff within every block pair the sub-block row sums agree within tol.
bool is_equitable(const SymMatrix& m, const Partition& p, double tol = kEquitableTol);

// b_{ij} = average row sum of block (i,j). Not symmetric in general.
Matrix quotient_matrix(const SymMatrix& m, const Partition& p);

// Spectral radius of a nonnegative quotient by shifted power iteration with
// Collatz-Wielandt bounds (Jacobi does not apply: the matrix is not symmetric).
double quotient_radius(const Matrix& q);

// rho(A_f(S_n)) = f(1,n-1) * sqrt(n-1), from the {center},{leaves} quotient.
double star_radius_closed_form(int n, const WeightFunction& f);

// rho(A_f(S_{d,n-d})): largest root of x^4 - (a+b+c)x^2 + ac with
// a=(d-1)f(1,d)^2, b=f(d,n-d)^2, c=(n-d-1)f(1,n-d)^2, from the 4-block
// equitable partition {leaves_1},{v_1},{v_2},{leaves_2}.
double double_star_radius_closed_form(int d, int n, const WeightFunction& f);

}  // namespace wspec
