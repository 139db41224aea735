#pragma once

#include "fracwave/fem.hpp"

#include <vector>

namespace fracwave {

/// Dirichlet eigensystem of -Laplace on (0,pi) or the unit square, with
/// closed-form L2-normalized sine eigenfunctions, sorted by eigenvalue.
struct SpectralBasis {
    Domain domain = Domain::Interval;
    std::vector<double> lambda;          ///< ascending, lambda[0] > 0
    std::vector<std::pair<int, int>> jk; ///< mode indices; 1D uses (k, 0)

    int size() const { return int(lambda.size()); }
    double eigenfunction(int mode, Point p) const;
};

/// First K modes. 1D domain is fixed to (0,pi): lambda_k = k^2.
/// 2D unit square: lambda_{jk} = pi^2 (j^2 + k^2).
SpectralBasis spectral_basis(Domain kind, int K);

/// Modal coefficients (f, phi_k) of a function, by composite quadrature
/// fine enough for the smooth catalog data (32 panels per wavelength).
std::vector<double> modal_coefficients(const SpectralBasis& basis, const ScalarFn& f);

} // namespace fracwave
