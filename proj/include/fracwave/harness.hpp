#pragma once

#include "fracwave/config.hpp"
#include "fracwave/examples.hpp"
#include "fracwave/forward.hpp"
#include "fracwave/inverse.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fracwave {

/// Forward problem assembled from the catalog: space built, datum
/// projected, alpha/N/r resolved (r = 0 means optimal grading).
struct BuiltForward {
    ExampleDef def;
    std::shared_ptr<FemSpace> space;
    ProblemSpec spec;
};

BuiltForward build_forward(const std::string& example, double alpha = 0.0, int N = 0,
                           double r = 0.0, int cells = 0, Scheme scheme = Scheme::Sfor);

/// Inversion setup with the inverse-crime guard: observations come from
/// the catalog's fine data grid unless same_grid is set.
struct BuiltInversion {
    ExampleDef def;
    std::shared_ptr<FemSpace> recon_space;
    std::shared_ptr<FemSpace> data_space;
    InversionSetup setup;
    double sigma = 0.0;
    int n_obs = 0;
};

BuiltInversion build_inversion(const std::string& example, double alpha = 0.0,
                               double sigma = -1.0, bool same_grid = false);

/// a-priori rho for a built inversion (beta = 1/2, a_norm = H1 seminorm of
/// the exact datum on the reconstruction grid).
double auto_rho(const BuiltInversion& inv, double sigma, int n);

/// One column of a reproduction table.
struct TableColumn {
    std::string label;
    double alpha = 0.0;
    double r = 0.0;
    std::vector<TableRow> rows;
};

/// Named convergence-table reproduction: ex1a-1.25, ex1a-1.5, ex1a-1.75,
/// ex1b-1.25, ex1b-1.5, ex1b-1.75, ex1b-1.99, ex1a-lifted, ex3-1.25,
/// ex3-1.75. Columns run concurrently.
std::vector<TableColumn> benchmark_table(const std::string& name);
const std::vector<std::string>& benchmark_table_names();

/// Execute a full experiment; writes CSV artifacts into config.output_dir
/// and returns a process exit status (0 = success).
int run_experiment(const ExperimentConfig& config);

} // namespace fracwave
