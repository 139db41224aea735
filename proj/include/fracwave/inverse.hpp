#pragma once

#include "fracwave/forward.hpp"

#include <cstdint>
#include <vector>

namespace fracwave {

/// Scattered observation points with their quasi-uniformity record.
struct ScatteredPoints {
    std::vector<Point> points;
    double d_max = 0.0; ///< fill distance (probed on a refined grid in 2D)
    double d_min = 0.0; ///< separation distance
    double B = 0.0;     ///< d_max / d_min
};

/// 1D: n equispaced interior points i*L/(n+1). 2D: the interior FEM grid
/// nodes; n must equal (M-1)^2 for the space's M.
ScatteredPoints scatter_points(const FemSpace& space, int n);

/// Noisy terminal observations m_i = (S a*)(x_i) + e_i with i.i.d.
/// Gaussian(0, sigma^2) noise from a seed-deterministic generator.
struct ObservationSet {
    std::vector<Point> points;
    Vec values;
    double sigma = 0.0;
    std::uint64_t seed = 0;

    int count() const { return int(values.size()); }
};

ObservationSet observe(const ProblemSpec& spec, const Field& a_star,
                       const ScatteredPoints& pts, double sigma, std::uint64_t seed);

/// Deterministic standard-normal generator (mt19937_64 + Box-Muller),
/// reproducible across platforms for a fixed seed.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    double next();

private:
    std::uint64_t state_;
    std::uint64_t next_u64();
};

/// ||u||_n = sqrt( (1/n) sum u(x_i)^2 ): unweighted point RMS.
double discrete_seminorm(const Vec& values);

/// Dense matrix of the discrete forward operator on the FEM basis,
/// G_{ij} = (S_{tau,h} phi_j)(x_i).
struct DesignMatrix {
    DenseMatrix g;
    std::uint64_t spec_hash = 0; ///< provenance of the generating spec
};

/// Hash of the parameters that determine the discrete operator S_{tau,h}.
std::uint64_t forward_spec_hash(const ProblemSpec& spec);

/// Terminal fields of the forward solves for every basis function
/// (columns computed concurrently, ordered by column index).
std::vector<Field> forward_columns(const ProblemSpec& spec);

DesignMatrix design_from_columns(const FemSpace& space, const std::vector<Field>& cols,
                                 const std::vector<Point>& points);

DesignMatrix assemble_design_matrix(const ProblemSpec& spec, const std::vector<Point>& points);

enum class Regularizer { H1Semi, H1Full };
enum class InverseSolver { Direct, GradientDescent };

struct TikhonovConfig {
    double rho = 1e-6;
    Regularizer regularizer = Regularizer::H1Semi;
    InverseSolver solver = InverseSolver::Direct;
    int gd_max_iters = 400000;
    double gd_tol = 1e-12; ///< on the gradient norm
};

/// argmin_a ||G a - m||_n^2 + rho ||a||_R^2 via the SPD normal equations
/// ((1/n) G'G + rho R) a = (1/n) G'm.
Field tikhonov_direct(const FemSpace& space, const DesignMatrix& design, const Vec& m,
                      const TikhonovConfig& config);

struct GdResult {
    Field a;
    int iterations = 0;
    bool converged = false;
    double grad_norm = 0.0;
};

/// Fixed-step gradient descent from a = 0 with step 1/L, L estimated by
/// 50 power iterations on the SPD system operator.
GdResult tikhonov_gd(const FemSpace& space, const DesignMatrix& design, const Vec& m,
                     const TikhonovConfig& config);

/// A-priori rule rho = (sigma n^{-1/2} / a_norm)^{1/(1/2 + (d/8)/(1+beta))}.
/// Requires beta in (d/4, 1].
double optimal_rho(double sigma, int n, double beta, int dim, double a_norm);

/// Per-trial noise -> reconstruction -> relative L2 error study.
struct InversionSetup {
    ProblemSpec recon;  ///< reconstruction grid (design matrix side)
    ProblemSpec data;   ///< data-generation grid (may differ: inverse-crime guard)
    Field a_star_recon; ///< exact datum on the reconstruction space
    Field a_star_data;  ///< exact datum on the data space
};

struct MonteCarloRow {
    int n = 0;
    double rho = 0.0;
    double mean_rel_err = 0.0;
    double std_rel_err = 0.0;
};

/// For each n: average over `seeds` trials (seed = base_seed + trial) of
/// ||a_rec - a*||_{L2} / ||a*||_{L2} with rho chosen by rho_rule(n).
/// Pass the forward columns of setup.recon to reuse them across calls
/// (rho sweeps, repeated studies); null recomputes them.
std::vector<MonteCarloRow> monte_carlo_study(const InversionSetup& setup,
                                             const std::vector<int>& ns, double sigma,
                                             int seeds, std::uint64_t base_seed,
                                             const std::function<double(int)>& rho_rule,
                                             const TikhonovConfig& base_config = {},
                                             const std::vector<Field>* columns = nullptr);

} // namespace fracwave
