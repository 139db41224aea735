#pragma once

#include "fracwave/time_mesh.hpp"

#include <vector>

namespace fracwave {

/// Kernel omega_p(t) = t^{p-1}/Gamma(p). Requires p >= 0 and t > 0 when
/// p < 1 (omega_0 is identically 0 through the 1/Gamma(0) factor).
double omega(double p, double t);

/// Nonuniform L1 weights for the Caputo derivative of order nu in (0,1).
/// weights(n)[j] = A_j^{(n)} with j = n-k, so index 0 multiplies the most
/// recent difference v^n - v^{n-1}.
class L1Weights {
public:
    L1Weights(const TimeMesh& mesh, double nu);

    double nu() const { return nu_; }
    const TimeMesh& mesh() const { return *mesh_; }

    /// Row of per-step weights [A_0^{(n)}, ..., A_{n-1}^{(n)}], 1 <= n <= N.
    std::vector<double> row(int n) const;

    /// A_0^{(n)} = tau_n^{-nu} / Gamma(2-nu), the implicit coefficient.
    double leading(int n) const;

private:
    const TimeMesh* mesh_;
    double nu_;
    double rg2nu_; // 1/Gamma(2-nu)
};

/// Discrete Caputo value sum_{k=1}^n A_{n-k}^{(n)} (v^k - v^{k-1}) from a
/// history v^0..v^n. Throws on length mismatch.
double discrete_caputo(const L1Weights& weights, const std::vector<double>& history);

/// Componentwise variant for vector-valued histories.
std::vector<double> discrete_caputo(const L1Weights& weights,
                                    const std::vector<std::vector<double>>& history);

/// Complementary kernels P_{n-j}^{(n)}, 1 <= j <= n, defined by
/// sum_{j=k}^n P_{n-j}^{(n)} A_{j-k}^{(j)} = 1 for every k. Only the
/// final row for the requested n is materialized.
struct PKernels {
    int n = 0;
    std::vector<double> p; ///< p[i] = P_i^{(n)}, i = n-j
};

PKernels p_kernels(const L1Weights& weights, int n);

/// max_{1<=k<=n} sum_{j=1}^k P_{k-j}^{(k)} omega_{2-alpha}(t_j), the growth
/// factor appearing in the discrete stability bound.
double stability_budget(const L1Weights& weights, int n, double alpha);

} // namespace fracwave
