#include "fracwave/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracwave {

double dot(const Vec& a, const Vec& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

void axpy(double c, const Vec& x, Vec& y)
{
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] += c * x[i];
}

Vec scaled(const Vec& x, double c)
{
    Vec y(x);
    for (double& v : y)
        v *= c;
    return y;
}

void SparseMatrix::add(int i, int j, double v)
{
    rows_[i].emplace_back(j, v);
}

void SparseMatrix::finalize()
{
    row_ptr_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) {
        auto& row = rows_[i];
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // merge duplicates
        std::size_t w = 0;
        for (std::size_t rdx = 0; rdx < row.size(); ++rdx) {
            if (w > 0 && row[w - 1].first == row[rdx].first)
                row[w - 1].second += row[rdx].second;
            else
                row[w++] = row[rdx];
        }
        row.resize(w);
        row_ptr_[i + 1] = row_ptr_[i] + int(w);
    }
    col_idx_.resize(row_ptr_[n_]);
    val_.resize(row_ptr_[n_]);
    for (int i = 0; i < n_; ++i) {
        int p = row_ptr_[i];
        for (auto& [j, v] : rows_[i]) {
            col_idx_[p] = j;
            val_[p] = v;
            ++p;
        }
        rows_[i].clear();
        rows_[i].shrink_to_fit();
    }
    finalized_ = true;
}

Vec SparseMatrix::multiply(const Vec& x) const
{
    Vec y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
            s += val_[p] * x[col_idx_[p]];
        y[i] = s;
    }
    return y;
}

double SparseMatrix::quadratic(const Vec& x) const
{
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
            s += x[i] * val_[p] * x[col_idx_[p]];
    return s;
}

int SparseMatrix::bandwidth() const
{
    int bw = 0;
    for (int i = 0; i < n_; ++i)
        for (int p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
            bw = std::max(bw, std::abs(i - col_idx_[p]));
    return bw;
}

BandCholesky::BandCholesky(const SparseMatrix& m) : n_(m.size()), bw_(m.bandwidth())
{
    // dense-within-band lower Cholesky: A = L L'
    band_.assign(std::size_t(n_) * (bw_ + 1), 0.0);
    auto L = [&](int i, int j) -> double& { return band_[std::size_t(i) * (bw_ + 1) + (i - j)]; };

    // scatter the lower triangle of A into the band
    for (int i = 0; i < n_; ++i)
        for (int p = m.row_ptr()[i]; p < m.row_ptr()[i + 1]; ++p) {
            const int j = m.col_idx()[p];
            if (j <= i)
                L(i, j) = m.values()[p];
        }

    for (int j = 0; j < n_; ++j) {
        double d = L(j, j);
        for (int k = std::max(0, j - bw_); k < j; ++k)
            d -= L(j, k) * L(j, k);
        if (!(d > 0.0))
            throw std::runtime_error("BandCholesky: matrix not SPD");
        d = std::sqrt(d);
        L(j, j) = d;
        const int iend = std::min(n_ - 1, j + bw_);
        for (int i = j + 1; i <= iend; ++i) {
            double s = (i - j <= bw_) ? L(i, j) : 0.0;
            for (int k = std::max(0, i - bw_); k < j; ++k)
                if (j - k <= bw_)
                    s -= L(i, k) * L(j, k);
            L(i, j) = s / d;
        }
    }
}

Vec BandCholesky::solve(const Vec& rhs) const
{
    auto L = [&](int i, int j) { return band_[std::size_t(i) * (bw_ + 1) + (i - j)]; };
    Vec y(rhs);
    for (int i = 0; i < n_; ++i) {
        double s = y[i];
        for (int k = std::max(0, i - bw_); k < i; ++k)
            s -= L(i, k) * y[k];
        y[i] = s / L(i, i);
    }
    for (int i = n_ - 1; i >= 0; --i) {
        double s = y[i];
        const int iend = std::min(n_ - 1, i + bw_);
        for (int k = i + 1; k <= iend; ++k)
            s -= L(k, i) * y[k];
        y[i] = s / L(i, i);
    }
    return y;
}

Vec conjugate_gradient(const SparseMatrix& m, const Vec& rhs)
{
    const int n = m.size();
    Vec x(n, 0.0), r(rhs), p(rhs);
    double rr = dot(r, r);
    const double tol2 = 1e-24 * std::max(rr, 1e-300);
    for (int it = 0; it < 10 * n && rr > tol2; ++it) {
        const Vec ap = m.multiply(p);
        const double alpha = rr / dot(p, ap);
        axpy(alpha, p, x);
        axpy(-alpha, ap, r);
        const double rr_new = dot(r, r);
        const double beta = rr_new / rr;
        rr = rr_new;
        for (int i = 0; i < n; ++i)
            p[i] = r[i] + beta * p[i];
    }
    return x;
}

Vec DenseMatrix::multiply(const Vec& x) const
{
    Vec y(r_, 0.0);
    for (int i = 0; i < r_; ++i) {
        double s = 0.0;
        const double* row = &a_[std::size_t(i) * c_];
        for (int j = 0; j < c_; ++j)
            s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

Vec DenseMatrix::multiply_transposed(const Vec& x) const
{
    Vec y(c_, 0.0);
    for (int i = 0; i < r_; ++i) {
        const double* row = &a_[std::size_t(i) * c_];
        const double xi = x[i];
        for (int j = 0; j < c_; ++j)
            y[j] += row[j] * xi;
    }
    return y;
}

DenseMatrix DenseMatrix::gram() const
{
    DenseMatrix g(c_, c_);
    for (int i = 0; i < r_; ++i) {
        const double* row = &a_[std::size_t(i) * c_];
        for (int j = 0; j < c_; ++j) {
            if (row[j] == 0.0)
                continue;
            for (int k = j; k < c_; ++k)
                g.at(j, k) += row[j] * row[k];
        }
    }
    for (int j = 0; j < c_; ++j)
        for (int k = 0; k < j; ++k)
            g.at(j, k) = g.at(k, j);
    return g;
}

Vec dense_spd_solve(DenseMatrix a, Vec rhs)
{
    const int n = a.rows();
    if (a.cols() != n || int(rhs.size()) != n)
        throw std::invalid_argument("dense_spd_solve: shape mismatch");
    // in-place lower Cholesky
    for (int j = 0; j < n; ++j) {
        double d = a.at(j, j);
        for (int k = 0; k < j; ++k)
            d -= a.at(j, k) * a.at(j, k);
        if (!(d > 0.0))
            throw std::runtime_error("dense_spd_solve: matrix not SPD");
        d = std::sqrt(d);
        a.at(j, j) = d;
        for (int i = j + 1; i < n; ++i) {
            double s = a.at(i, j);
            for (int k = 0; k < j; ++k)
                s -= a.at(i, k) * a.at(j, k);
            a.at(i, j) = s / d;
        }
    }
    for (int i = 0; i < n; ++i) {
        double s = rhs[i];
        for (int k = 0; k < i; ++k)
            s -= a.at(i, k) * rhs[k];
        rhs[i] = s / a.at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = rhs[i];
        for (int k = i + 1; k < n; ++k)
            s -= a.at(k, i) * rhs[k];
        rhs[i] = s / a.at(i, i);
    }
    return rhs;
}

} // namespace fracwave
