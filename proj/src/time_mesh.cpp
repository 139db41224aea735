#include "fracwave/time_mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace fracwave {

TimeMesh graded_mesh(double T, int N, double r)
{
    if (!(T > 0.0) || N < 1 || !(r >= 1.0))
        throw std::invalid_argument("graded_mesh: need T > 0, N >= 1, r >= 1");
    TimeMesh mesh;
    mesh.T = T;
    mesh.N = N;
    mesh.r = r;
    mesh.nodes.resize(N + 1);
    mesh.steps.resize(N);
    for (int n = 0; n <= N; ++n)
        mesh.nodes[n] = T * std::pow(double(n) / N, r);
    for (int n = 1; n <= N; ++n) {
        mesh.steps[n - 1] = mesh.nodes[n] - mesh.nodes[n - 1];
        if (!(mesh.steps[n - 1] > 0.0))
            throw std::invalid_argument("graded_mesh: degenerate step");
    }
    return mesh;
}

double optimal_grading(double alpha)
{
    if (!(alpha > 1.0) || !(alpha < 2.0))
        throw std::domain_error("optimal_grading: alpha must lie in (1,2)");
    return (4.0 - alpha) / (2.0 - alpha);
}

} // namespace fracwave
