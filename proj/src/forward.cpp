#include "fracwave/forward.hpp"

#include "fracwave/gamma.hpp"
#include "fracwave/mlf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fracwave {

namespace {

// c*M + A with merged sparsity
SparseMatrix combine(const SparseMatrix& mass, const SparseMatrix& stiffness, double c)
{
    SparseMatrix out(mass.size());
    for (int i = 0; i < mass.size(); ++i) {
        for (int p = mass.row_ptr()[i]; p < mass.row_ptr()[i + 1]; ++p)
            out.add(i, mass.col_idx()[p], c * mass.values()[p]);
        for (int p = stiffness.row_ptr()[i]; p < stiffness.row_ptr()[i + 1]; ++p)
            out.add(i, stiffness.col_idx()[p], stiffness.values()[p]);
    }
    out.finalize();
    return out;
}

Trajectory run_scheme(const ProblemSpec& spec, const Vec& load_shape,
                      const std::vector<double>& load_scale)
{
    const FemSpace& space = *spec.space;
    const int nh = space.dof_count();
    Trajectory traj;
    traj.mesh = graded_mesh(spec.T, spec.N, spec.r);
    const L1Weights weights(traj.mesh, spec.nu());

    traj.u.assign(spec.N + 1, Field(nh, 0.0));
    traj.v.assign(spec.N + 1, Field(nh, 0.0));
    std::vector<Field> du, dv; // u^k - u^{k-1}, v^k - v^{k-1}
    du.reserve(spec.N);
    dv.reserve(spec.N);

    for (int n = 1; n <= spec.N; ++n) {
        const auto a = weights.row(n);
        const double a0 = a[0];

        // H_w^n = -a0 w^{n-1} + sum_{k<n} A_{n-k}^{(n)} (w^k - w^{k-1})
        Field hu = scaled(traj.u[n - 1], -a0);
        Field hv = scaled(traj.v[n - 1], -a0);
        for (int k = 1; k < n; ++k) {
            axpy(a[n - k], du[k - 1], hu);
            axpy(a[n - k], dv[k - 1], hv);
        }

        Vec rhs(nh, 0.0);
        axpy(load_scale[n], load_shape, rhs);
        Vec mass_term = scaled(hu, a0);
        axpy(1.0, hv, mass_term);
        axpy(-1.0, space.mass().multiply(mass_term), rhs);

        const SparseMatrix system = combine(space.mass(), space.stiffness(), a0 * a0);
        const BandCholesky chol(system);
        traj.u[n] = chol.solve(rhs);

        traj.v[n] = scaled(traj.u[n], a0);
        axpy(1.0, hu, traj.v[n]);

        Field dun = traj.u[n];
        axpy(-1.0, traj.u[n - 1], dun);
        du.push_back(std::move(dun));
        Field dvn = traj.v[n];
        axpy(-1.0, traj.v[n - 1], dvn);
        dv.push_back(std::move(dvn));
    }
    return traj;
}

} // namespace

void ProblemSpec::validate() const
{
    if (!(alpha > 1.0) || !(alpha < 2.0))
        throw std::domain_error("ProblemSpec: alpha in (1,2) required");
    if (!space)
        throw std::invalid_argument("ProblemSpec: space not set");
    if (int(a1.size()) != space->dof_count())
        throw std::invalid_argument("ProblemSpec: a1 size mismatch");
    if (!(T > 0.0) || N < 1 || !(r >= 1.0))
        throw std::invalid_argument("ProblemSpec: bad mesh parameters");
}

Trajectory solve_sfor(const ProblemSpec& spec)
{
    spec.validate();
    const TimeMesh mesh = graded_mesh(spec.T, spec.N, spec.r);
    // load f^n = omega_{2-alpha}(t_n) * M a1
    Vec shape = spec.space->mass().multiply(spec.a1);
    std::vector<double> scale(spec.N + 1, 0.0);
    for (int n = 1; n <= spec.N; ++n)
        scale[n] = omega(2.0 - spec.alpha, mesh.nodes[n]);
    return run_scheme(spec, shape, scale);
}

Trajectory solve_lifted(const ProblemSpec& spec)
{
    spec.validate();
    const TimeMesh mesh = graded_mesh(spec.T, spec.N, spec.r);
    // load f^n = t_n * (-A a1) in weak form
    Vec shape = scaled(spec.space->stiffness().multiply(spec.a1), -1.0);
    std::vector<double> scale(mesh.nodes);
    Trajectory traj = run_scheme(spec, shape, scale);
    for (int n = 1; n <= spec.N; ++n)
        axpy(mesh.nodes[n], spec.a1, traj.u[n]); // u = bold_u + t a1
    return traj;
}

Trajectory solve_forward(const ProblemSpec& spec)
{
    return spec.scheme == Scheme::Sfor ? solve_sfor(spec) : solve_lifted(spec);
}

Field apply_S(const ProblemSpec& spec, const Field& a1)
{
    ProblemSpec s = spec;
    s.a1 = a1;
    return solve_forward(s).u.back();
}

Field spectral_reference(const SpectralBasis& basis, const std::vector<double>& modal,
                         double alpha, double t, const FemSpace& space)
{
    Field out(space.dof_count(), 0.0);
    if (t == 0.0)
        return out;
    std::vector<double> factor(basis.size());
    for (int k = 0; k < basis.size(); ++k)
        factor[k] = t * mlf({alpha, 2.0}, -basis.lambda[k] * std::pow(t, alpha)) * modal[k];
    for (int i = 0; i < space.dof_count(); ++i) {
        const Point p = space.node(i);
        double s = 0.0;
        for (int k = 0; k < basis.size(); ++k)
            s += factor[k] * basis.eigenfunction(k, p);
        out[i] = s;
    }
    return out;
}

std::vector<TableRow> convergence_table(const ProblemSpec& base, const std::vector<int>& ns,
                                        double r, int n_ref)
{
    for (int n : ns)
        if (n_ref % n != 0)
            throw std::invalid_argument("convergence_table: grids must nest (N | N_ref)");

    ProblemSpec ref_spec = base;
    ref_spec.N = n_ref;
    ref_spec.r = r;
    const Trajectory ref = solve_forward(ref_spec);

    std::vector<TableRow> rows;
    double prev = 0.0;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        ProblemSpec s = base;
        s.N = ns[i];
        s.r = r;
        const Trajectory traj = solve_forward(s);
        const int stride = n_ref / ns[i];
        double err = 0.0;
        for (int n = 1; n <= s.N; ++n) {
            Field d = traj.u[n];
            axpy(-1.0, ref.u[std::size_t(n) * stride], d);
            err = std::max(err, base.space->l2_norm(d));
        }
        TableRow row;
        row.N = ns[i];
        row.e_l2 = err;
        row.order = (i == 0) ? std::numeric_limits<double>::quiet_NaN()
                             : std::log2(prev / err);
        rows.push_back(row);
        prev = err;
    }
    return rows;
}

} // namespace fracwave
