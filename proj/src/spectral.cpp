#include "wspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wspec {

SymMatrix build_weighted_adjacency(const Graph& g, const WeightFunction& f) {
    SymMatrix m(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        double w = f.eval(g.degree(u), g.degree(v));
        if (!std::isfinite(w) || w <= 0.0)
            throw std::domain_error("weight not finite and positive at degree pair (" +
                                    std::to_string(g.degree(u)) + "," +
                                    std::to_string(g.degree(v)) + ")");
        m.set(u, v, w);
    }
    return m;
}

std::vector<double> eigen_spectrum(const SymMatrix& m) {
    const int n = m.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    const double stop = kJacobiTol * m.frobenius_norm();
    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    const int max_sweeps = 100;
    int sweep = 0;
    bool polished = false;
    for (;;) {
        if (off_norm() <= stop) {
            // one cleanup sweep past the threshold: the quadratic tail drives
            // the truncation error far below the rounding noise
            if (polished) break;
            polished = true;
        }
        if (++sweep > max_sweeps)
            throw ConvergenceError("Jacobi did not converge in " +
                                   std::to_string(max_sweeps) + " sweeps");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

double spectral_radius(const SymMatrix& m) {
    auto eig = eigen_spectrum(m);
    double lo = eig.back(), hi = eig.front();
    double rho = std::max(std::abs(lo), std::abs(hi));
    if (m.nonnegative() && hi < -lo - 1e-9 * std::max(1.0, rho))
        throw std::logic_error("nonnegative matrix with largest eigenvalue below |min|");
    return rho;
}

SpectralResult principal_eigenvector(const SymMatrix& m) {
    const int n = m.order();
    if (!m.nonnegative())
        throw std::invalid_argument("principal_eigenvector needs a nonnegative matrix");
    if (!m.irreducible())
        throw ReducibleMatrixError(
            "matrix is reducible (disconnected support); positive eigenvector fails");

    if (n == 1) return {m.at(0, 0), {1.0}, 0, 0.0};

    const double sigma = m.max_abs_row_sum();
    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(double(n)));
    double prev_rq = std::numeric_limits<double>::infinity();

    for (int it = 1; it <= kPowerMaxIterations; ++it) {
        std::vector<double> y = m.multiply(x);
        double rq = 0.0;
        for (int i = 0; i < n; ++i) rq += x[i] * y[i];
        double res = 0.0;
        for (int i = 0; i < n; ++i) {
            double r = y[i] - rq * x[i];
            res += r * r;
        }
        res = std::sqrt(res);
        double scale = std::max(1.0, std::abs(rq));
        if (std::abs(rq - prev_rq) <= kPowerRqTol * scale &&
            res <= kPowerResidualTol * scale) {
            for (double xi : x)
                if (!(xi > 0.0))
                    throw ConvergenceError("principal eigenvector is not positive");
            return {rq, x, it, res};
        }
        prev_rq = rq;
        // advance: x <- (M + sigma I) x, normalized
        double norm = 0.0;
        for (int i = 0; i < n; ++i) {
            y[i] += sigma * x[i];
            norm += y[i] * y[i];
        }
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
    }
    throw ConvergenceError("power iteration exceeded " +
                           std::to_string(kPowerMaxIterations) + " iterations");
}

double rayleigh(const SymMatrix& m, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != m.order())
        throw std::invalid_argument("rayleigh: vector length mismatch");
    double norm2 = 0.0;
    for (double xi : x) norm2 += xi * xi;
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9)
        throw std::invalid_argument("rayleigh needs a unit vector");
    auto y = m.multiply(x);
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

void validate_partition(const Partition& p, int n) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    int covered = 0;
    if (p.blocks.empty()) throw std::invalid_argument("partition has no blocks");
    for (const auto& block : p.blocks) {
        if (block.empty()) throw std::invalid_argument("partition has an empty block");
        for (int v : block) {
            if (v < 0 || v >= n) throw std::invalid_argument("partition index out of range");
            if (seen[v]) throw std::invalid_argument("partition blocks are not disjoint");
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("partition does not cover all vertices");
}

bool is_equitable(const SymMatrix& m, const Partition& p, double tol) {
    validate_partition(p, m.order());
    for (const auto& bi : p.blocks) {
        for (const auto& bj : p.blocks) {
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            for (int i : bi) {
                double sum = 0.0;
                for (int j : bj) sum += m.at(i, j);
                lo = std::min(lo, sum);
                hi = std::max(hi, sum);
            }
            if (hi - lo > tol) return false;
        }
    }
    return true;
}

Matrix quotient_matrix(const SymMatrix& m, const Partition& p) {
    validate_partition(p, m.order());
    const int k = static_cast<int>(p.blocks.size());
    Matrix q(k);
    for (int bi = 0; bi < k; ++bi)
        for (int bj = 0; bj < k; ++bj) {
            double total = 0.0;
            for (int i : p.blocks[bi])
                for (int j : p.blocks[bj]) total += m.at(i, j);
            q.set(bi, bj, total / static_cast<double>(p.blocks[bi].size()));
        }
    return q;
}

double quotient_radius(const Matrix& q) {
    const int k = q.order();
    if (!q.nonnegative())
        throw std::invalid_argument("quotient_radius needs a nonnegative matrix");
    if (k == 1) return q.at(0, 0);

    const double sigma = q.max_abs_row_sum();
    std::vector<double> x(static_cast<std::size_t>(k), 1.0 / std::sqrt(double(k)));
    for (int it = 1; it <= kPowerMaxIterations; ++it) {
        std::vector<double> y = q.multiply(x);
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int i = 0; i < k; ++i) {
            y[i] += sigma * x[i];
            double ratio = y[i] / x[i];  // Collatz-Wielandt bounds on rho + sigma
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        if (hi - lo <= 1e-12 * std::max(1.0, hi)) return 0.5 * (hi + lo) - sigma;
        double norm = 0.0;
        for (double yi : y) norm += yi * yi;
        norm = std::sqrt(norm);
        for (int i = 0; i < k; ++i) x[i] = y[i] / norm;
    }
    throw ConvergenceError("quotient power iteration did not converge (reducible quotient?)");
}

double star_radius_closed_form(int n, const WeightFunction& f) {
    if (n < 2) throw std::invalid_argument("star closed form needs n >= 2");
    return f.eval(1, n - 1) * std::sqrt(double(n - 1));
}

double double_star_radius_closed_form(int d, int n, const WeightFunction& f) {
    if (n < 4 || d < 2 || d > n - 2)
        throw std::invalid_argument("double star closed form needs 2 <= d <= n-2");
    d = std::min(d, n - d);
    double p = f.eval(1, d), q = f.eval(d, n - d), r = f.eval(1, n - d);
    double a = (d - 1) * p * p;
    double b = q * q;
    double c = (n - d - 1) * r * r;
    double s = a + b + c;
    double disc = std::sqrt(s * s - 4.0 * a * c);
    return std::sqrt(0.5 * (s + disc));
}

}  // namespace wspec
