#include "fracwave/l1_caputo.hpp"

#include "fracwave/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fracwave {

double omega(double p, double t)
{
    if (p < 0.0)
        throw std::domain_error("omega: p >= 0 required");
    if (t <= 0.0 && p < 1.0)
        throw std::domain_error("omega: t > 0 required for p < 1");
    return std::pow(t, p - 1.0) * rgamma(p);
}

L1Weights::L1Weights(const TimeMesh& mesh, double nu) : mesh_(&mesh), nu_(nu)
{
    if (!(nu > 0.0) || !(nu < 1.0))
        throw std::domain_error("L1Weights: nu in (0,1) required");
    rg2nu_ = rgamma(2.0 - nu);
}

double L1Weights::leading(int n) const
{
    const double tau = mesh_->steps[n - 1];
    return std::pow(tau, -nu_) * rg2nu_;
}

std::vector<double> L1Weights::row(int n) const
{
    if (n < 1 || n > mesh_->N)
        throw std::out_of_range("L1Weights::row: n out of range");
    const auto& t = mesh_->nodes;
    const double p = 1.0 - nu_;
    std::vector<double> a(n);
    for (int k = 1; k <= n; ++k) {
        const double big = t[n] - t[k - 1];
        const double small = t[n] - t[k];
        const double tau = t[k] - t[k - 1];
        if (small > 0.0 && tau < 1e-4 * big) {
            // nearly equal powers: the direct difference loses eps/delta
            // accuracy, which past delta ~ 1e-4 can no longer resolve the
            // gap between consecutive weights; the midpoint form with its
            // second-order correction has error O(delta^4) instead
            const double xi = t[n] - 0.5 * (t[k] + t[k - 1]);
            const double corr =
                1.0 + (p - 1.0) * (p - 2.0) / 24.0 * (tau / xi) * (tau / xi);
            a[n - k] = p * std::pow(xi, p - 1.0) * corr * rg2nu_;
        } else {
            a[n - k] = (std::pow(big, p) - std::pow(small, p)) * rg2nu_ / tau;
        }
    }
    return a;
}

double discrete_caputo(const L1Weights& weights, const std::vector<double>& history)
{
    const int n = int(history.size()) - 1;
    if (n < 1 || n > weights.mesh().N)
        throw std::invalid_argument("discrete_caputo: history length mismatch");
    const auto a = weights.row(n);
    double s = 0.0;
    for (int k = 1; k <= n; ++k)
        s += a[n - k] * (history[k] - history[k - 1]);
    return s;
}

std::vector<double> discrete_caputo(const L1Weights& weights,
                                    const std::vector<std::vector<double>>& history)
{
    const int n = int(history.size()) - 1;
    if (n < 1 || n > weights.mesh().N)
        throw std::invalid_argument("discrete_caputo: history length mismatch");
    const auto a = weights.row(n);
    std::vector<double> out(history[0].size(), 0.0);
    for (int k = 1; k <= n; ++k) {
        if (history[k].size() != out.size())
            throw std::invalid_argument("discrete_caputo: component count mismatch");
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += a[n - k] * (history[k][i] - history[k - 1][i]);
    }
    return out;
}

PKernels p_kernels(const L1Weights& weights, int n)
{
    if (n < 1 || n > weights.mesh().N)
        throw std::out_of_range("p_kernels: n out of range");
    // All weight rows up to n are needed by the triangular recursion.
    std::vector<std::vector<double>> a(n + 1);
    for (int i = 1; i <= n; ++i)
        a[i] = weights.row(i);

    PKernels out;
    out.n = n;
    out.p.assign(n, 0.0);
    out.p[0] = 1.0 / a[n][0]; // k = n case of the identity
    for (int j = n - 1; j >= 1; --j) {
        double s = 0.0;
        for (int i = j + 1; i <= n; ++i)
            s += (a[i][i - j - 1] - a[i][i - j]) * out.p[n - i];
        out.p[n - j] = s / a[j][0];
    }
    return out;
}

double stability_budget(const L1Weights& weights, int n, double alpha)
{
    const auto& t = weights.mesh().nodes;
    double worst = 0.0;
    for (int k = 1; k <= n; ++k) {
        const auto pk = p_kernels(weights, k);
        double s = 0.0;
        for (int j = 1; j <= k; ++j)
            s += pk.p[k - j] * omega(2.0 - alpha, t[j]);
        worst = std::max(worst, s);
    }
    return worst;
}

} // namespace fracwave
