#include "fracwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracwave {

double SpectralBasis::eigenfunction(int mode, Point p) const
{
    const auto [j, k] = jk[mode];
    if (domain == Domain::Interval)
        return std::sqrt(2.0 / M_PI) * std::sin(j * p.x);
    return 2.0 * std::sin(j * M_PI * p.x) * std::sin(k * M_PI * p.y);
}

SpectralBasis spectral_basis(Domain kind, int K)
{
    if (K < 1)
        throw std::invalid_argument("spectral_basis: K >= 1");
    SpectralBasis b;
    b.domain = kind;
    if (kind == Domain::Interval) {
        for (int k = 1; k <= K; ++k) {
            b.lambda.push_back(double(k) * k);
            b.jk.emplace_back(k, 0);
        }
        return b;
    }
    // enumerate a generous index box, sort by eigenvalue, keep K
    const int box = int(std::ceil(std::sqrt(2.0 * K))) + 2;
    std::vector<std::pair<double, std::pair<int, int>>> modes;
    for (int j = 1; j <= box; ++j)
        for (int k = 1; k <= box; ++k)
            modes.push_back({M_PI * M_PI * (double(j) * j + double(k) * k), {j, k}});
    std::sort(modes.begin(), modes.end());
    modes.resize(K);
    for (auto& [lam, idx] : modes) {
        b.lambda.push_back(lam);
        b.jk.push_back(idx);
    }
    return b;
}

std::vector<double> modal_coefficients(const SpectralBasis& basis, const ScalarFn& f)
{
    std::vector<double> c(basis.size(), 0.0);
    if (basis.domain == Domain::Interval) {
        const int kmax = basis.jk.back().first;
        const int panels = std::max(256, 32 * kmax);
        const double h = M_PI / panels;
        for (int mode = 0; mode < basis.size(); ++mode) {
            double s = 0.0;
            for (int i = 0; i < panels; ++i) {
                // Simpson on each panel
                const double x0 = i * h, x1 = x0 + h, xm = x0 + 0.5 * h;
                const auto g = [&](double x) {
                    return f({x, 0.0}) * basis.eigenfunction(mode, {x, 0.0});
                };
                s += h / 6.0 * (g(x0) + 4.0 * g(xm) + g(x1));
            }
            c[mode] = s;
        }
        return c;
    }
    int kmax = 1;
    for (auto& [j, k] : basis.jk)
        kmax = std::max({kmax, j, k});
    const int panels = std::max(64, 8 * kmax);
    const double h = 1.0 / panels;
    for (int mode = 0; mode < basis.size(); ++mode) {
        double s = 0.0;
        for (int iy = 0; iy < panels; ++iy)
            for (int ix = 0; ix < panels; ++ix) {
                const Point pm{(ix + 0.5) * h, (iy + 0.5) * h};
                s += h * h * f(pm) * basis.eigenfunction(mode, pm);
            }
        c[mode] = s;
    }
    return c;
}

} // namespace fracwave
