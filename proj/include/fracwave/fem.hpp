#pragma once

#include "fracwave/linalg.hpp"

#include <array>
#include <functional>
#include <memory>

namespace fracwave {

enum class Domain { Interval, UnitSquare };

struct Point {
    double x = 0.0;
    double y = 0.0;
};

using ScalarFn = std::function<double(Point)>;

/// Coefficient vector over the interior nodes of a FemSpace.
using Field = Vec;

/// P1 finite element space with homogeneous Dirichlet conditions on the
/// interval (0,L) or the unit square, on a uniform mesh of M cells per
/// direction (squares split along the lower-left -> upper-right diagonal).
/// Mass and stiffness matrices are assembled once and immutable after.
class FemSpace {
public:
    static FemSpace interval(double length, int cells);
    static FemSpace unit_square(int cells);

    Domain domain() const { return domain_; }
    double length() const { return length_; } // 1D only
    int cells() const { return cells_; }
    double h() const { return h_; }
    int dof_count() const { return dofs_; }

    const SparseMatrix& mass() const { return mass_; }
    const SparseMatrix& stiffness() const { return stiffness_; }
    Point node(int dof) const; ///< coordinates of an interior node

    /// L2 projection onto the space: solves M c = (f, phi_i) with
    /// per-element Gauss quadrature (3 points per interval/triangle).
    Field l2_project(const ScalarFn& f) const;

    /// Load vector (f, phi_i) without the mass solve.
    Vec load_vector(const ScalarFn& f) const;

    /// P1 interpolation of the field at a point of the closed domain.
    /// Exactly 0 on the boundary. Throws std::domain_error outside.
    double evaluate(const Field& field, Point p) const;

    double l2_norm(const Field& field) const;      // sqrt(c' M c)
    double h1_seminorm(const Field& field) const;  // sqrt(c' A c)

    /// Cholesky factor of the mass matrix (built lazily, then cached).
    const BandCholesky& mass_cholesky() const;

private:
    FemSpace() = default;
    void assemble_1d();
    void assemble_2d();
    int dof_index_2d(int ix, int iy) const { return (iy - 1) * (cells_ - 1) + (ix - 1); }

    Domain domain_ = Domain::Interval;
    double length_ = 0.0;
    int cells_ = 0;
    double h_ = 0.0;
    int dofs_ = 0;
    SparseMatrix mass_{0};
    SparseMatrix stiffness_{0};
    mutable std::shared_ptr<BandCholesky> mass_chol_;
};

/// Build a space; M >= 2 cells. 1D spaces take the interval length.
FemSpace build_space(Domain kind, int cells, double length = 1.0);

} // namespace fracwave
