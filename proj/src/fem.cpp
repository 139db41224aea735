#include "fracwave/fem.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace fracwave {

namespace {

// 3-point Gauss-Legendre on [0,1]
constexpr double kG3x[3] = {0.1127016653792583, 0.5, 0.8872983346207417};
constexpr double kG3w[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};

} // namespace

FemSpace FemSpace::interval(double length, int cells)
{
    if (cells < 2 || !(length > 0.0))
        throw std::invalid_argument("FemSpace: need M >= 2 cells, length > 0");
    FemSpace s;
    s.domain_ = Domain::Interval;
    s.length_ = length;
    s.cells_ = cells;
    s.h_ = length / cells;
    s.dofs_ = cells - 1;
    s.assemble_1d();
    return s;
}

FemSpace FemSpace::unit_square(int cells)
{
    if (cells < 2)
        throw std::invalid_argument("FemSpace: need M >= 2 cells");
    FemSpace s;
    s.domain_ = Domain::UnitSquare;
    s.length_ = 1.0;
    s.cells_ = cells;
    s.h_ = 1.0 / cells;
    s.dofs_ = (cells - 1) * (cells - 1);
    s.assemble_2d();
    return s;
}

FemSpace build_space(Domain kind, int cells, double length)
{
    return kind == Domain::Interval ? FemSpace::interval(length, cells)
                                    : FemSpace::unit_square(cells);
}

void FemSpace::assemble_1d()
{
    mass_ = SparseMatrix(dofs_);
    stiffness_ = SparseMatrix(dofs_);
    const double h = h_;
    for (int i = 0; i < dofs_; ++i) {
        mass_.add(i, i, 2.0 * h / 3.0);
        stiffness_.add(i, i, 2.0 / h);
        if (i + 1 < dofs_) {
            mass_.add(i, i + 1, h / 6.0);
            mass_.add(i + 1, i, h / 6.0);
            stiffness_.add(i, i + 1, -1.0 / h);
            stiffness_.add(i + 1, i, -1.0 / h);
        }
    }
    mass_.finalize();
    stiffness_.finalize();
}

void FemSpace::assemble_2d()
{
    mass_ = SparseMatrix(dofs_);
    stiffness_ = SparseMatrix(dofs_);
    const int m = cells_;
    const double area = h_ * h_ / 2.0;

    // Each square cell (cx, cy) splits into two triangles along the
    // lower-left -> upper-right diagonal. P1 gradients on a right triangle
    // with legs h give the constant element stiffness below; the element
    // mass is area/12 * [[2,1,1],[1,2,1],[1,1,2]].
    //
    // Triangle A: (ll, lr, ur), legs along x then y.
    // Triangle B: (ll, ur, ul), legs along y then x.
    const auto add_triangle = [&](const std::array<std::pair<int, int>, 3>& v) {
        // gradients: solve from vertex coordinates (all triangles congruent,
        // but computing them keeps the orientation honest)
        double px[3], py[3];
        for (int a = 0; a < 3; ++a) {
            px[a] = v[a].first * h_;
            py[a] = v[a].second * h_;
        }
        const double det =
            (px[1] - px[0]) * (py[2] - py[0]) - (px[2] - px[0]) * (py[1] - py[0]);
        double gx[3], gy[3];
        gx[0] = (py[1] - py[2]) / det;
        gy[0] = (px[2] - px[1]) / det;
        gx[1] = (py[2] - py[0]) / det;
        gy[1] = (px[0] - px[2]) / det;
        gx[2] = (py[0] - py[1]) / det;
        gy[2] = (px[1] - px[0]) / det;

        int dof[3];
        for (int a = 0; a < 3; ++a) {
            const auto [ix, iy] = v[a];
            dof[a] = (ix >= 1 && ix <= m - 1 && iy >= 1 && iy <= m - 1)
                         ? dof_index_2d(ix, iy)
                         : -1;
        }
        for (int a = 0; a < 3; ++a) {
            if (dof[a] < 0)
                continue;
            for (int b = 0; b < 3; ++b) {
                if (dof[b] < 0)
                    continue;
                stiffness_.add(dof[a], dof[b], (gx[a] * gx[b] + gy[a] * gy[b]) * area);
                mass_.add(dof[a], dof[b], (a == b ? 2.0 : 1.0) * area / 12.0);
            }
        }
    };

    for (int cy = 0; cy < m; ++cy)
        for (int cx = 0; cx < m; ++cx) {
            const std::pair<int, int> ll{cx, cy}, lr{cx + 1, cy}, ur{cx + 1, cy + 1},
                ul{cx, cy + 1};
            add_triangle({ll, lr, ur});
            add_triangle({ll, ur, ul});
        }
    mass_.finalize();
    stiffness_.finalize();
}

Point FemSpace::node(int dof) const
{
    if (domain_ == Domain::Interval)
        return {(dof + 1) * h_, 0.0};
    const int ix = dof % (cells_ - 1) + 1;
    const int iy = dof / (cells_ - 1) + 1;
    return {ix * h_, iy * h_};
}

Vec FemSpace::load_vector(const ScalarFn& f) const
{
    Vec b(dofs_, 0.0);
    if (domain_ == Domain::Interval) {
        for (int cell = 0; cell < cells_; ++cell) {
            const double x0 = cell * h_;
            const int left = cell - 1, right = cell; // interior dof indices
            for (int g = 0; g < 3; ++g) {
                const double t = kG3x[g];
                const double fx = f({x0 + t * h_, 0.0}) * kG3w[g] * h_;
                if (left >= 0)
                    b[left] += fx * (1.0 - t);
                if (right < dofs_)
                    b[right] += fx * t;
            }
        }
        return b;
    }
    // 2D: midpoint-of-edges rule, exact for quadratics on each triangle
    const int m = cells_;
    const double area = h_ * h_ / 2.0;
    const auto tri = [&](const std::array<std::pair<int, int>, 3>& v) {
        Point p[3];
        for (int a = 0; a < 3; ++a)
            p[a] = {v[a].first * h_, v[a].second * h_};
        // edge midpoints opposite each vertex; P1 hat values there are
        // 0 at own vertex midpoint, 1/2 at the two adjacent ones
        const Point mid[3] = {{0.5 * (p[1].x + p[2].x), 0.5 * (p[1].y + p[2].y)},
                              {0.5 * (p[0].x + p[2].x), 0.5 * (p[0].y + p[2].y)},
                              {0.5 * (p[0].x + p[1].x), 0.5 * (p[0].y + p[1].y)}};
        const double fm[3] = {f(mid[0]), f(mid[1]), f(mid[2])};
        for (int a = 0; a < 3; ++a) {
            const auto [ix, iy] = v[a];
            if (ix < 1 || ix > m - 1 || iy < 1 || iy > m - 1)
                continue;
            // phi_a is 1/2 at the two midpoints adjacent to vertex a
            double s = 0.0;
            for (int e = 0; e < 3; ++e)
                if (e != a)
                    s += 0.5 * fm[e];
            b[dof_index_2d(ix, iy)] += (area / 3.0) * s;
        }
    };
    for (int cy = 0; cy < m; ++cy)
        for (int cx = 0; cx < m; ++cx) {
            const std::pair<int, int> ll{cx, cy}, lr{cx + 1, cy}, ur{cx + 1, cy + 1},
                ul{cx, cy + 1};
            tri({ll, lr, ur});
            tri({ll, ur, ul});
        }
    return b;
}

const BandCholesky& FemSpace::mass_cholesky() const
{
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (!mass_chol_)
        mass_chol_ = std::make_shared<BandCholesky>(mass_);
    return *mass_chol_;
}

Field FemSpace::l2_project(const ScalarFn& f) const
{
    return mass_cholesky().solve(load_vector(f));
}

double FemSpace::evaluate(const Field& field, Point p) const
{
    if (int(field.size()) != dofs_)
        throw std::invalid_argument("evaluate: field size mismatch");
    const double eps = 1e-12;
    if (domain_ == Domain::Interval) {
        if (p.x < -eps || p.x > length_ + eps)
            throw std::domain_error("evaluate: point outside domain");
        const double xc = std::clamp(p.x, 0.0, length_);
        int cell = std::min(int(xc / h_), cells_ - 1);
        const double t = xc / h_ - cell;
        const double vl = (cell - 1 >= 0) ? field[cell - 1] : 0.0;
        const double vr = (cell < dofs_) ? field[cell] : 0.0;
        return vl * (1.0 - t) + vr * t;
    }
    if (p.x < -eps || p.x > 1.0 + eps || p.y < -eps || p.y > 1.0 + eps)
        throw std::domain_error("evaluate: point outside domain");
    const double xc = std::clamp(p.x, 0.0, 1.0);
    const double yc = std::clamp(p.y, 0.0, 1.0);
    const int cx = std::min(int(xc / h_), cells_ - 1);
    const int cy = std::min(int(yc / h_), cells_ - 1);
    const double s = xc / h_ - cx; // local coords in [0,1]
    const double t = yc / h_ - cy;
    const auto nodal = [&](int ix, int iy) -> double {
        if (ix < 1 || ix > cells_ - 1 || iy < 1 || iy > cells_ - 1)
            return 0.0;
        return field[dof_index_2d(ix, iy)];
    };
    // cell split along the ll->ur diagonal (s = t line)
    if (s >= t) {
        // triangle (ll, lr, ur): barycentric in (s, t)
        return nodal(cx, cy) * (1.0 - s) + nodal(cx + 1, cy) * (s - t) +
               nodal(cx + 1, cy + 1) * t;
    }
    // triangle (ll, ur, ul)
    return nodal(cx, cy) * (1.0 - t) + nodal(cx + 1, cy + 1) * s +
           nodal(cx, cy + 1) * (t - s);
}

double FemSpace::l2_norm(const Field& field) const
{
    return std::sqrt(std::max(0.0, mass_.quadratic(field)));
}

double FemSpace::h1_seminorm(const Field& field) const
{
    return std::sqrt(std::max(0.0, stiffness_.quadratic(field)));
}

} // namespace fracwave
