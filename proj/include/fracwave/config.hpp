#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fracwave {

/// One experiment invocation. Zero/negative sentinel values mean "take the
/// documented default": alpha/cells/N from the example catalog, T = 0.1,
/// scheme = sfor, r = optimal_grading(alpha).
struct ExperimentConfig {
    std::string kind = "forward"; ///< forward|convergence|invert|sweep|monte_carlo|mlf|tables
    std::string example = "ex1a";
    double alpha = 0.0;
    double T = 0.1;
    int N = 0;
    double r = 0.0;
    int cells = 0;
    std::string scheme = "sfor"; ///< sfor|lifted

    double sigma = -1.0;
    int n_obs = 0;
    double rho = 0.0; ///< 0 with rho_auto=false -> invalid for invert
    bool rho_auto = false;
    std::uint64_t seed = 1;
    std::string solver = "direct";        ///< direct|gd
    std::string regularizer = "h1semi";   ///< h1semi|h1full
    bool same_grid = false;               ///< disable the inverse-crime guard
    int mc_seeds = 20;
    std::vector<int> ns; ///< convergence N list / monte-carlo n list
    int sweep_k_min = 8;  ///< rho sweep endpoints: rho = 10^{-k/4}
    int sweep_k_max = 20;

    double mlf_alpha = 1.5;
    double mlf_beta = 1.0;
    double mlf_z = 0.0;

    std::string paper_table; ///< tables subcommand target
    std::string output_dir = ".";

    bool operator==(const ExperimentConfig&) const = default;
};

std::string to_json_string(const ExperimentConfig& config);
ExperimentConfig config_from_json_string(const std::string& text);
ExperimentConfig config_from_json_file(const std::string& path);

/// FNV-1a hash of the canonical JSON form; stamped into output metadata.
std::uint64_t config_hash(const ExperimentConfig& config);

} // namespace fracwave
