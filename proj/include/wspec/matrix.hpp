#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wspec {

// Dense storage only; desk-scale experiments use n <= 50.
inline constexpr int kMaxMatrixOrder = 4096;

// Dense real symmetric matrix. set() writes both (i,j) and (j,i), so symmetry
// is exact bit-for-bit by construction.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    int order() const { return n_; }
    double at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, double v);

    double frobenius_norm() const;
    double max_abs_row_sum() const;
    bool nonnegative() const;
    // True iff the nonzero off-diagonal pattern is connected (irreducible).
    bool irreducible() const;
    std::vector<double> multiply(const std::vector<double>& x) const;

private:
    std::size_t idx(int i, int j) const {
        check(i);
        check(j);
        return static_cast<std::size_t>(i) * n_ + j;
    }
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("matrix index out of range");
    }
    int n_;
    std::vector<double> a_;
};

// Small general square matrix; quotient matrices of equitable partitions are
// not symmetric in general.
class Matrix {
public:
    explicit Matrix(int n);

    int order() const { return n_; }
    double at(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, double v) { a_[idx(i, j)] = v; }
    double max_abs_row_sum() const;
    bool nonnegative() const;
    std::vector<double> multiply(const std::vector<double>& x) const;

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i) * n_ + j;
    }
    int n_;
    std::vector<double> a_;
};

// Debug dump: "n" then n rows of n space-separated values, 17 significant
// digits so a dump round-trips exactly.
std::string write_matrix_text(const SymMatrix& m);
std::string write_matrix_text(const Matrix& m);

}  // namespace wspec
