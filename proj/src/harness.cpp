#include "fracwave/harness.hpp"

#include "fracwave/csv.hpp"
#include "fracwave/mlf.hpp"
#include "fracwave/threads.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace fracwave {

namespace {

std::shared_ptr<FemSpace> make_space(const ExampleDef& def, int cells)
{
    return std::make_shared<FemSpace>(def.domain == Domain::Interval
                                          ? FemSpace::interval(def.length, cells)
                                          : FemSpace::unit_square(cells));
}

Scheme parse_scheme(const std::string& s)
{
    if (s == "sfor")
        return Scheme::Sfor;
    if (s == "lifted")
        return Scheme::Lifted;
    throw std::invalid_argument("unknown scheme: " + s);
}

std::vector<int> default_table_ns(const ExampleDef& def)
{
    return def.domain == Domain::Interval ? std::vector<int>{16, 32, 64, 128}
                                          : std::vector<int>{20, 40, 80, 160};
}

std::ofstream open_output(const ExperimentConfig& config, const std::string& filename,
                          std::string* path_out)
{
    std::filesystem::create_directories(config.output_dir);
    const std::string path = config.output_dir + "/" + filename;
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    if (path_out)
        *path_out = path;
    return out;
}

void write_field_csv(CsvWriter& csv, const FemSpace& space, const Field& field)
{
    if (space.domain() == Domain::Interval) {
        csv.header({"x", "value"});
        for (int i = 0; i < space.dof_count(); ++i)
            csv.row({space.node(i).x, field[i]});
    } else {
        csv.header({"x", "y", "value"});
        for (int i = 0; i < space.dof_count(); ++i)
            csv.row({space.node(i).x, space.node(i).y, field[i]});
    }
}

void stamp(CsvWriter& csv, const ExperimentConfig& config)
{
    csv.meta("generator", "fracwave");
    csv.meta("config_hash", config_hash(config));
    csv.meta("seed", config.seed);
    csv.meta("noise_model", "gaussian(0,sigma^2)");
    csv.meta("seminorm_convention", "unweighted point RMS, no domain-measure factor");
}

} // namespace

BuiltForward build_forward(const std::string& example, double alpha, int N, double r,
                           int cells, Scheme scheme)
{
    BuiltForward b;
    b.def = get_example(example);
    if (alpha <= 0.0)
        alpha = b.def.alpha;
    if (cells <= 0)
        cells = b.def.forward_cells;
    if (N <= 0)
        N = 64;
    if (r <= 0.0)
        r = optimal_grading(alpha);
    b.space = make_space(b.def, cells);
    b.spec.alpha = alpha;
    b.spec.T = 0.1;
    b.spec.space = b.space.get();
    b.spec.a1 = b.space->l2_project(b.def.a1);
    b.spec.scheme = scheme;
    b.spec.N = N;
    b.spec.r = r;
    return b;
}

BuiltInversion build_inversion(const std::string& example, double alpha, double sigma,
                               bool same_grid)
{
    BuiltInversion inv;
    inv.def = get_example(example);
    if (!inv.def.backward)
        throw std::invalid_argument(example + " is not a backward example");
    if (alpha <= 0.0)
        alpha = inv.def.alpha;
    inv.sigma = sigma >= 0.0 ? sigma : inv.def.sigma;
    inv.n_obs = inv.def.n_obs;

    const double r = optimal_grading(alpha);
    inv.recon_space = make_space(inv.def, inv.def.recon_cells);
    inv.data_space =
        same_grid ? inv.recon_space : make_space(inv.def, inv.def.forward_cells);

    inv.setup.recon.alpha = alpha;
    inv.setup.recon.T = 0.1;
    inv.setup.recon.space = inv.recon_space.get();
    inv.setup.recon.scheme = Scheme::Sfor;
    inv.setup.recon.N = inv.def.recon_N;
    inv.setup.recon.r = r;
    inv.setup.a_star_recon = inv.recon_space->l2_project(inv.def.a1);
    inv.setup.recon.a1 = inv.setup.a_star_recon;

    inv.setup.data = inv.setup.recon;
    inv.setup.data.space = inv.data_space.get();
    inv.setup.data.N = same_grid ? inv.def.recon_N : inv.def.ref_N;
    inv.setup.a_star_data = inv.data_space->l2_project(inv.def.a1);
    inv.setup.data.a1 = inv.setup.a_star_data;
    return inv;
}

double auto_rho(const BuiltInversion& inv, double sigma, int n)
{
    const int dim = inv.def.domain == Domain::Interval ? 1 : 2;
    const double a_norm = inv.recon_space->h1_seminorm(inv.setup.a_star_recon);
    return optimal_rho(sigma, n, 0.5, dim, a_norm);
}

const std::vector<std::string>& benchmark_table_names()
{
    static const std::vector<std::string> names = {
        "ex1a-1.25", "ex1a-1.5", "ex1a-1.75", "ex1b-1.25", "ex1b-1.5",
        "ex1b-1.75", "ex1b-1.99", "ex1a-lifted", "ex3-1.25", "ex3-1.75"};
    return names;
}

std::vector<TableColumn> benchmark_table(const std::string& name)
{
    struct ColumnSpec {
        std::string label;
        double alpha;
        double r;
        Scheme scheme;
    };
    std::string example;
    std::vector<ColumnSpec> specs;

    const auto dash = name.rfind('-');
    if (dash == std::string::npos)
        throw std::invalid_argument("unknown table: " + name);
    example = name.substr(0, dash);
    const std::string variant = name.substr(dash + 1);

    if (variant == "lifted") {
        specs = {{"alpha=1.01 r=2", 1.01, 2.0, Scheme::Lifted},
                 {"alpha=1.01 r=(4-a)/a", 1.01, (4.0 - 1.01) / 1.01, Scheme::Lifted},
                 {"alpha=1.99 r=2", 1.99, 2.0, Scheme::Lifted}};
    } else if (variant == "1.99") {
        specs = {{"r=1", 1.99, 1.0, Scheme::Sfor},
                 {"r=5", 1.99, 5.0, Scheme::Sfor},
                 {"r=10", 1.99, 10.0, Scheme::Sfor}};
    } else {
        const double alpha = std::stod(variant);
        specs = {{"r=1", alpha, 1.0, Scheme::Sfor},
                 {"r_opt", alpha, optimal_grading(alpha), Scheme::Sfor},
                 {"r=(4-a)/a", alpha, (4.0 - alpha) / alpha, Scheme::Sfor}};
    }

    const ExampleDef& def = get_example(example);
    const std::vector<int> ns = default_table_ns(def);

    std::vector<TableColumn> cols(specs.size());
    parallel_for(int(specs.size()), [&](int i) {
        const auto& cs = specs[i];
        BuiltForward fwd = build_forward(example, cs.alpha, ns.back(), cs.r, 0, cs.scheme);
        TableColumn col;
        col.label = cs.label;
        col.alpha = cs.alpha;
        col.r = cs.r;
        col.rows = convergence_table(fwd.spec, ns, cs.r, def.ref_N);
        cols[i] = std::move(col);
    });
    return cols;
}

namespace {

int run_forward(const ExperimentConfig& config)
{
    BuiltForward fwd = build_forward(config.example, config.alpha, config.N, config.r,
                                     config.cells, parse_scheme(config.scheme));
    fwd.spec.T = config.T;
    const Trajectory traj = solve_forward(fwd.spec);
    std::string path;
    std::ofstream out = open_output(config, "forward_" + config.example + ".csv", &path);
    CsvWriter csv(out);
    stamp(csv, config);
    csv.meta("alpha", fwd.spec.alpha);
    csv.meta("N", std::uint64_t(fwd.spec.N));
    csv.meta("r", fwd.spec.r);
    write_field_csv(csv, *fwd.space, traj.terminal());
    std::cout << "forward " << config.example << " alpha=" << fwd.spec.alpha
              << " N=" << fwd.spec.N << " -> " << path << "\n";
    return 0;
}

int run_convergence(const ExperimentConfig& config)
{
    BuiltForward fwd = build_forward(config.example, config.alpha, 0, config.r,
                                     config.cells, parse_scheme(config.scheme));
    fwd.spec.T = config.T;
    const std::vector<int> ns = config.ns.empty() ? default_table_ns(fwd.def) : config.ns;
    const int n_ref = config.N > 0 ? config.N : fwd.def.ref_N;
    const auto rows = convergence_table(fwd.spec, ns, fwd.spec.r, n_ref);

    std::string path;
    std::ofstream out =
        open_output(config, "convergence_" + config.example + ".csv", &path);
    CsvWriter csv(out);
    stamp(csv, config);
    csv.meta("alpha", fwd.spec.alpha);
    csv.meta("r", fwd.spec.r);
    csv.meta("N_ref", std::uint64_t(n_ref));
    csv.header({"N", "eL2", "Order"});
    for (const auto& row : rows)
        csv.row({double(row.N), row.e_l2, row.order});
    std::cout << "convergence " << config.example << " alpha=" << fwd.spec.alpha
              << " r=" << fwd.spec.r << " -> " << path << "\n";
    for (const auto& row : rows)
        std::printf("  N=%4d  eL2=%.4e  Order=%.3f\n", row.N, row.e_l2, row.order);
    return 0;
}

int run_tables(const ExperimentConfig& config)
{
    const auto cols = benchmark_table(config.paper_table);
    std::string path;
    std::ofstream out = open_output(config, "tables_" + config.paper_table + ".csv", &path);
    CsvWriter csv(out);
    stamp(csv, config);
    csv.meta("table", config.paper_table);
    std::vector<std::string> header{"N"};
    for (const auto& col : cols) {
        header.push_back("eL2[" + col.label + "]");
        header.push_back("Order[" + col.label + "]");
    }
    csv.header(header);
    for (std::size_t i = 0; i < cols[0].rows.size(); ++i) {
        std::vector<double> row{double(cols[0].rows[i].N)};
        for (const auto& col : cols) {
            row.push_back(col.rows[i].e_l2);
            row.push_back(col.rows[i].order);
        }
        csv.row(row);
    }
    std::cout << "table " << config.paper_table << " -> " << path << "\n";
    for (const auto& col : cols) {
        std::printf("  [%s]\n", col.label.c_str());
        for (const auto& row : col.rows)
            std::printf("    N=%4d  eL2=%.4e  Order=%.3f\n", row.N, row.e_l2, row.order);
    }
    return 0;
}

int run_invert(const ExperimentConfig& config)
{
    BuiltInversion inv =
        build_inversion(config.example, config.alpha, config.sigma, config.same_grid);
    const int n = config.n_obs > 0 ? config.n_obs : inv.n_obs;
    const ScatteredPoints pts = scatter_points(*inv.recon_space, n);
    const ObservationSet obs =
        observe(inv.setup.data, inv.setup.a_star_data, pts, inv.sigma, config.seed);

    const DesignMatrix design = assemble_design_matrix(inv.setup.recon, pts.points);

    TikhonovConfig tik;
    tik.regularizer =
        config.regularizer == "h1full" ? Regularizer::H1Full : Regularizer::H1Semi;
    tik.rho = config.rho_auto ? auto_rho(inv, inv.sigma, n) : config.rho;
    if (!(tik.rho > 0.0))
        throw std::invalid_argument("invert: need --rho > 0 or --rho-auto");

    Field rec;
    int iterations = 0;
    if (config.solver == "gd") {
        tik.solver = InverseSolver::GradientDescent;
        GdResult gd = tikhonov_gd(*inv.recon_space, design, obs.values, tik);
        if (!gd.converged)
            std::cerr << "warning: gradient descent hit max_iters, |grad|="
                      << gd.grad_norm << "\n";
        rec = std::move(gd.a);
        iterations = gd.iterations;
    } else {
        rec = tikhonov_direct(*inv.recon_space, design, obs.values, tik);
    }

    Field diff = rec;
    axpy(-1.0, inv.setup.a_star_recon, diff);
    const double rel =
        inv.recon_space->l2_norm(diff) / inv.recon_space->l2_norm(inv.setup.a_star_recon);

    std::string path;
    std::ofstream out = open_output(config, "invert_" + config.example + ".csv", &path);
    CsvWriter csv(out);
    stamp(csv, config);
    csv.meta("n_obs", std::uint64_t(n));
    csv.meta("sigma", inv.sigma);
    csv.meta("rho", tik.rho);
    csv.meta("solver", config.solver);
    csv.meta("rel_l2_error", rel);
    csv.meta("data_grid",
             config.same_grid ? "same as reconstruction (inverse crime, debug)"
                              : "finer data grid (inverse-crime guard)");
    write_field_csv(csv, *inv.recon_space, rec);
    std::printf("invert %s n=%d sigma=%g rho=%.6g solver=%s rel_l2_err=%.4f iters=%d -> %s\n",
                config.example.c_str(), n, inv.sigma, tik.rho, config.solver.c_str(), rel,
                iterations, path.c_str());
    return 0;
}

int run_sweep(const ExperimentConfig& config)
{
    BuiltInversion inv =
        build_inversion(config.example, config.alpha, config.sigma, config.same_grid);
    const int n = config.n_obs > 0 ? config.n_obs : inv.n_obs;
    const ScatteredPoints pts = scatter_points(*inv.recon_space, n);
    const ObservationSet obs =
        observe(inv.setup.data, inv.setup.a_star_data, pts, inv.sigma, config.seed);
    const DesignMatrix design = assemble_design_matrix(inv.setup.recon, pts.points);

    std::string path;
    std::ofstream out = open_output(config, "sweep_" + config.example + ".csv", &path);
    CsvWriter csv(out);
    stamp(csv, config);
    csv.meta("n_obs", std::uint64_t(n));
    csv.meta("sigma", inv.sigma);
    csv.header({"rho", "rel_l2_error"});
    const double a_norm = inv.recon_space->l2_norm(inv.setup.a_star_recon);
    for (int k = config.sweep_k_min; k <= config.sweep_k_max; ++k) {
        TikhonovConfig tik;
        tik.rho = std::pow(10.0, -k / 4.0);
        Field rec = tikhonov_direct(*inv.recon_space, design, obs.values, tik);
        axpy(-1.0, inv.setup.a_star_recon, rec);
        csv.row({tik.rho, inv.recon_space->l2_norm(rec) / a_norm});
    }
    std::cout << "sweep " << config.example << " -> " << path << "\n";
    return 0;
}

int run_monte_carlo(const ExperimentConfig& config)
{
    BuiltInversion inv =
        build_inversion(config.example, config.alpha, config.sigma, config.same_grid);
    std::vector<int> ns = config.ns;
    if (ns.empty()) {
        if (inv.def.domain == Domain::Interval)
            ns = {11, 49, 199};
        else
            ns = {inv.n_obs};
    }
    const auto rho_rule = [&](int n) {
        return config.rho > 0.0 ? config.rho : auto_rho(inv, inv.sigma, n);
    };
    const auto rows =
        monte_carlo_study(inv.setup, ns, inv.sigma, config.mc_seeds, config.seed, rho_rule);

    std::string path;
    std::ofstream out =
        open_output(config, "monte_carlo_" + config.example + ".csv", &path);
    CsvWriter csv(out);
    stamp(csv, config);
    csv.meta("sigma", inv.sigma);
    csv.meta("mc_seeds", std::uint64_t(config.mc_seeds));
    // squared discretization error scale of the reconstruction grid
    const double h = inv.recon_space->h();
    const double e_s = std::pow(h, 4) + std::pow(double(inv.setup.recon.N),
                                                 -(4.0 - inv.setup.recon.alpha));
    csv.meta("e_S_estimate", e_s);
    csv.header({"n", "rho", "mean_rel_l2_error", "std_rel_l2_error"});
    for (const auto& row : rows)
        csv.row({double(row.n), row.rho, row.mean_rel_err, row.std_rel_err});
    std::cout << "monte-carlo " << config.example << " -> " << path << "\n";
    for (const auto& row : rows)
        std::printf("  n=%4d rho=%.3e mean=%.4f std=%.4f\n", row.n, row.rho,
                    row.mean_rel_err, row.std_rel_err);
    return 0;
}

int run_mlf(const ExperimentConfig& config)
{
    const double v = mlf({config.mlf_alpha, config.mlf_beta}, config.mlf_z);
    std::printf("%.15g\n", v);
    return 0;
}

} // namespace

int run_experiment(const ExperimentConfig& config)
{
    try {
        if (config.kind == "forward")
            return run_forward(config);
        if (config.kind == "convergence")
            return run_convergence(config);
        if (config.kind == "tables")
            return run_tables(config);
        if (config.kind == "invert")
            return run_invert(config);
        if (config.kind == "sweep")
            return run_sweep(config);
        if (config.kind == "monte_carlo")
            return run_monte_carlo(config);
        if (config.kind == "mlf")
            return run_mlf(config);
        std::cerr << "unknown experiment kind: " << config.kind << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace fracwave
