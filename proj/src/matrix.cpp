#include "wspec/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace wspec {

SymMatrix::SymMatrix(int n) : n_(n) {
    if (n < 1 || n > kMaxMatrixOrder)
        throw std::invalid_argument("matrix order must be in [1," +
                                    std::to_string(kMaxMatrixOrder) + "]");
    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

void SymMatrix::set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::max_abs_row_sum() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += std::abs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

bool SymMatrix::nonnegative() const {
    for (double v : a_)
        if (v < 0.0) return false;
    return true;
}

bool SymMatrix::irreducible() const {
    if (n_ == 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n_; ++w)
            if (w != v && !seen[w] && at(v, w) != 0.0) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == n_;
}

std::vector<double> SymMatrix::multiply(const std::vector<double>& x) const {
    std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        const double* row = a_.data() + static_cast<std::size_t>(i) * n_;
        for (int j = 0; j < n_; ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

Matrix::Matrix(int n) : n_(n) {
    if (n < 1 || n > kMaxMatrixOrder)
        throw std::invalid_argument("matrix order must be in [1," +
                                    std::to_string(kMaxMatrixOrder) + "]");
    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

double Matrix::max_abs_row_sum() const {
    double best = 0.0;
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += std::abs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

bool Matrix::nonnegative() const {
    for (double v : a_)
        if (v < 0.0) return false;
    return true;
}

std::vector<double> Matrix::multiply(const std::vector<double>& x) const {
    std::vector<double> y(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

namespace {
template <class M>
std::string dump(const M& m) {
    std::string out = std::to_string(m.order()) + "\n";
    char buf[40];
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", m.at(i, j));
            if (j) out += ' ';
            out += buf;
        }
        out += '\n';
    }
    return out;
}
}  // namespace

std::string write_matrix_text(const SymMatrix& m) { return dump(m); }
std::string write_matrix_text(const Matrix& m) { return dump(m); }

}  // namespace wspec
