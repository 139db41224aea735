#pragma once

#include "fracwave/fem.hpp"
#include "fracwave/l1_caputo.hpp"
#include "fracwave/spectral.hpp"
#include "fracwave/time_mesh.hpp"

#include <vector>

namespace fracwave {

enum class Scheme { Sfor, Lifted };

/// Fully discrete problem: alpha in (1,2), zero initial displacement and
/// zero Dirichlet data, initial velocity a1 given as a coefficient Field.
struct ProblemSpec {
    double alpha = 1.5;
    double T = 0.1;
    const FemSpace* space = nullptr;
    Field a1;
    Scheme scheme = Scheme::Sfor;
    int N = 64;
    double r = 1.0;

    double nu() const { return alpha / 2.0; }
    void validate() const;
};

/// Time history of the coefficient vectors (u^n, v^n), n = 0..N.
/// For the lifted scheme u holds the recovered solution u = bold_u + t*a1
/// while v holds the auxiliary variable of the lifted system.
struct Trajectory {
    TimeMesh mesh;
    std::vector<Field> u, v;

    const Field& terminal() const { return u.back(); }
};

/// One step-elimination solve of the SFOR system: per step the SPD matrix
/// (A0^2 M + A) is factored and u^n solved for, then v^n is recovered
/// algebraically.
Trajectory solve_sfor(const ProblemSpec& spec);

/// The lifted variant: right-hand load t_n*(-A a1) in weak form, then
/// u^n = bold_u^n + t_n a1. Requires a1 with meaningful stiffness action.
Trajectory solve_lifted(const ProblemSpec& spec);

/// Dispatch on spec.scheme.
Trajectory solve_forward(const ProblemSpec& spec);

/// Discrete solution operator S_{tau,h}: terminal coefficient vector of
/// the forward solve with initial velocity a1 (spec.a1 is ignored).
Field apply_S(const ProblemSpec& spec, const Field& a1);

/// Exact spectral solution u(.,t) = sum_k t E_{alpha,2}(-lambda_k t^alpha)
/// c_k phi_k sampled at the interior nodes of the given space.
Field spectral_reference(const SpectralBasis& basis, const std::vector<double>& modal,
                         double alpha, double t, const FemSpace& space);

struct TableRow {
    int N = 0;
    double e_l2 = 0.0;
    double order = 0.0; ///< NaN in the first row
};

/// e_{L2}(N) = max_{1<=n<=N} || U_N^n - U_ref^{n s} ||_{L2}, s = N_ref/N,
/// against the fine solution on the same spatial grid and grading; Order
/// column from successive halvings. Grids must nest: N | N_ref.
std::vector<TableRow> convergence_table(const ProblemSpec& base, const std::vector<int>& ns,
                                        double r, int n_ref);

} // namespace fracwave
