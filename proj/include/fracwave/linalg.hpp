#pragma once

#include <cstddef>
#include <vector>

namespace fracwave {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
void axpy(double c, const Vec& x, Vec& y); // y += c*x
Vec scaled(const Vec& x, double c);

/// Sparse matrix in compressed-row storage; symmetric matrices store both
/// triangles so matvec stays a plain row sweep.
class SparseMatrix {
public:
    explicit SparseMatrix(int n = 0) : n_(n), rows_(n) {}

    int size() const { return n_; }
    void add(int i, int j, double v); // accumulates duplicates
    void finalize();                  // build CSR; call once after assembly

    Vec multiply(const Vec& x) const;
    double quadratic(const Vec& x) const; // x' M x
    int bandwidth() const;

    // CSR access (valid after finalize)
    const std::vector<int>& row_ptr() const { return row_ptr_; }
    const std::vector<int>& col_idx() const { return col_idx_; }
    const std::vector<double>& values() const { return val_; }

private:
    int n_;
    std::vector<std::vector<std::pair<int, double>>> rows_; // assembly buffer
    std::vector<int> row_ptr_, col_idx_;
    std::vector<double> val_;
    bool finalized_ = false;
};

/// Banded Cholesky factorization of an SPD sparse matrix, factored once
/// and reused across solves. Falls back on conjugate gradients via
/// solve_spd() when the matrix is not usefully banded.
class BandCholesky {
public:
    explicit BandCholesky(const SparseMatrix& m);
    Vec solve(const Vec& rhs) const;

private:
    int n_, bw_;
    std::vector<double> band_; // lower band, band_[i*(bw_+1)+d] = L(i, i-d)
};

/// Conjugate gradients, tolerance 1e-12 relative, at most 10*n iterations.
Vec conjugate_gradient(const SparseMatrix& m, const Vec& rhs);

/// Dense symmetric matrix with Cholesky solve, used by the normal equations.
class DenseMatrix {
public:
    DenseMatrix(int rows = 0, int cols = 0) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, 0.0) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    double& at(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    double at(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }

    Vec multiply(const Vec& x) const;            // A x
    Vec multiply_transposed(const Vec& x) const; // A' x

    /// Column Gram matrix A' A (cols x cols).
    DenseMatrix gram() const;

private:
    int r_, c_;
    std::vector<double> a_;
};

/// In-place Cholesky solve of an SPD dense system. Throws on breakdown.
Vec dense_spd_solve(DenseMatrix a, Vec rhs);

} // namespace fracwave
