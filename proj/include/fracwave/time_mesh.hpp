#pragma once

#include <vector>

namespace fracwave {

/// Graded temporal grid t_n = T*(n/N)^r, n = 0..N.
struct TimeMesh {
    double T = 0.0;
    int N = 0;
    double r = 1.0;
    std::vector<double> nodes; ///< t_0..t_N
    std::vector<double> steps; ///< tau_1..tau_N, steps[n-1] = t_n - t_{n-1}
};

/// Build the graded mesh. Requires T > 0, N >= 1, r >= 1.
TimeMesh graded_mesh(double T, int N, double r);

/// r_opt = (4 - alpha)/(2 - alpha) for alpha in (1,2).
double optimal_grading(double alpha);

} // namespace fracwave
