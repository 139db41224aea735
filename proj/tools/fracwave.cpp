#include "fracwave/config.hpp"
#include "fracwave/harness.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <string>

using namespace fracwave;

int main(int argc, char** argv)
{
    CLI::App app{"Time-fractional wave forward solver and initial-velocity "
                 "reconstruction from noisy terminal observations"};
    app.require_subcommand(1);

    ExperimentConfig config;
    std::string config_file;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_file, "JSON config file (overrides flags)");
        cmd->add_option("--output-dir", config.output_dir, "output directory");
        cmd->add_option("--T", config.T, "final time (default 0.1)");
    };
    const auto add_forward_opts = [&](CLI::App* cmd, bool with_steps) {
        cmd->add_option("--example", config.example, "ex1a|ex1b|ex2a|ex2b|ex3|ex4");
        cmd->add_option("--alpha", config.alpha, "fractional order in (1,2)");
        if (with_steps)
            cmd->add_option("--N", config.N, "time steps");
        cmd->add_option("--r", config.r, "mesh grading (default optimal)");
        cmd->add_option("--cells", config.cells, "space cells per direction");
        cmd->add_option("--scheme", config.scheme, "sfor|lifted");
    };
    const auto add_inverse_opts = [&](CLI::App* cmd) {
        cmd->add_option("--example", config.example, "ex2a|ex2b|ex4");
        cmd->add_option("--alpha", config.alpha, "fractional order in (1,2)");
        cmd->add_option("--sigma", config.sigma, "noise level");
        cmd->add_option("--n", config.n_obs, "observation count");
        cmd->add_option("--rho", config.rho, "regularization parameter");
        cmd->add_flag("--rho-auto", config.rho_auto, "a-priori rho rule");
        cmd->add_option("--seed", config.seed, "noise seed");
        cmd->add_option("--solver", config.solver, "direct|gd");
        cmd->add_option("--regularizer", config.regularizer, "h1semi|h1full");
        cmd->add_flag("--same-grid", config.same_grid,
                      "generate data on the reconstruction grid (debug)");
    };

    auto* fwd = app.add_subcommand("forward", "solve a forward problem, emit terminal field");
    add_common(fwd);
    add_forward_opts(fwd, true);

    auto* conv = app.add_subcommand("convergence", "temporal convergence table");
    add_common(conv);
    add_forward_opts(conv, false);
    conv->add_option("--Ns", config.ns, "coarse step counts (default 16..128 / 20..160)");
    conv->add_option("--N-ref", config.N, "reference step count");

    auto* tab = app.add_subcommand("tables", "reproduce a named benchmark table");
    add_common(tab);
    tab->add_option("--paper-table", config.paper_table, "table name")->required();

    auto* inv = app.add_subcommand("invert", "Tikhonov reconstruction of a1");
    add_common(inv);
    add_inverse_opts(inv);

    auto* sweep = app.add_subcommand("sweep", "rho sweep, (rho, error) CSV");
    add_common(sweep);
    add_inverse_opts(sweep);
    std::string rhos_range;
    sweep->add_option("--rhos", rhos_range, "k1..k2 exponent range, rho = 10^{-k/4}");
    sweep->add_option("--k-min", config.sweep_k_min, "rho = 10^{-k/4} start");
    sweep->add_option("--k-max", config.sweep_k_max, "rho = 10^{-k/4} end");

    auto* mc = app.add_subcommand("monte-carlo", "seed-averaged error study");
    add_common(mc);
    add_inverse_opts(mc);
    mc->add_option("--ns", config.ns, "observation counts");
    mc->add_option("--seeds", config.mc_seeds, "trials per n (default 20)");

    auto* ml = app.add_subcommand("mlf", "evaluate E_{alpha,beta}(z)");
    ml->add_option("--config", config_file, "JSON config file (overrides flags)");
    ml->add_option("--alpha", config.mlf_alpha, "order in (0,2]");
    ml->add_option("--beta", config.mlf_beta, "second parameter");
    ml->add_option("--z", config.mlf_z, "argument");

    CLI11_PARSE(app, argc, argv);

    if (!rhos_range.empty()) {
        const auto sep = rhos_range.find("..");
        if (sep == std::string::npos) {
            std::fprintf(stderr, "--rhos expects k1..k2\n");
            return 2;
        }
        config.sweep_k_min = std::stoi(rhos_range.substr(0, sep));
        config.sweep_k_max = std::stoi(rhos_range.substr(sep + 2));
    }

    if (fwd->parsed())
        config.kind = "forward";
    else if (conv->parsed())
        config.kind = "convergence";
    else if (tab->parsed())
        config.kind = "tables";
    else if (inv->parsed())
        config.kind = "invert";
    else if (sweep->parsed())
        config.kind = "sweep";
    else if (mc->parsed())
        config.kind = "monte_carlo";
    else if (ml->parsed())
        config.kind = "mlf";

    if (!config_file.empty()) {
        const std::string kind = config.kind;
        config = config_from_json_file(config_file);
        if (config.kind.empty())
            config.kind = kind;
    }

    return run_experiment(config);
}
