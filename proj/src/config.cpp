#include "fracwave/config.hpp"

#include "json.hpp"

#include <fstream>
#include <stdexcept>

namespace fracwave {

namespace {

using nlohmann::json;

json to_json(const ExperimentConfig& c)
{
    return json{{"kind", c.kind},
                {"example", c.example},
                {"alpha", c.alpha},
                {"T", c.T},
                {"N", c.N},
                {"r", c.r},
                {"cells", c.cells},
                {"scheme", c.scheme},
                {"sigma", c.sigma},
                {"n_obs", c.n_obs},
                {"rho", c.rho},
                {"rho_auto", c.rho_auto},
                {"seed", c.seed},
                {"solver", c.solver},
                {"regularizer", c.regularizer},
                {"same_grid", c.same_grid},
                {"mc_seeds", c.mc_seeds},
                {"ns", c.ns},
                {"sweep_k_min", c.sweep_k_min},
                {"sweep_k_max", c.sweep_k_max},
                {"mlf_alpha", c.mlf_alpha},
                {"mlf_beta", c.mlf_beta},
                {"mlf_z", c.mlf_z},
                {"paper_table", c.paper_table},
                {"output_dir", c.output_dir}};
}

ExperimentConfig from_json(const json& j)
{
    ExperimentConfig c;
    try {
        c.kind = j.value("kind", c.kind);
        c.example = j.value("example", c.example);
        c.alpha = j.value("alpha", c.alpha);
        c.T = j.value("T", c.T);
        c.N = j.value("N", c.N);
        c.r = j.value("r", c.r);
        c.cells = j.value("cells", c.cells);
        c.scheme = j.value("scheme", c.scheme);
        c.sigma = j.value("sigma", c.sigma);
        c.n_obs = j.value("n_obs", c.n_obs);
        c.rho = j.value("rho", c.rho);
        c.rho_auto = j.value("rho_auto", c.rho_auto);
        c.seed = j.value("seed", c.seed);
        c.solver = j.value("solver", c.solver);
        c.regularizer = j.value("regularizer", c.regularizer);
        c.same_grid = j.value("same_grid", c.same_grid);
        c.mc_seeds = j.value("mc_seeds", c.mc_seeds);
        c.ns = j.value("ns", c.ns);
        c.sweep_k_min = j.value("sweep_k_min", c.sweep_k_min);
        c.sweep_k_max = j.value("sweep_k_max", c.sweep_k_max);
        c.mlf_alpha = j.value("mlf_alpha", c.mlf_alpha);
        c.mlf_beta = j.value("mlf_beta", c.mlf_beta);
        c.mlf_z = j.value("mlf_z", c.mlf_z);
        c.paper_table = j.value("paper_table", c.paper_table);
        c.output_dir = j.value("output_dir", c.output_dir);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config parse: ") + e.what());
    }
    return c;
}

} // namespace

std::string to_json_string(const ExperimentConfig& config)
{
    return to_json(config).dump(2);
}

ExperimentConfig config_from_json_string(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse: ") + e.what());
    }
    return from_json(j);
}

ExperimentConfig config_from_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config file not readable: " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return config_from_json_string(text);
}

std::uint64_t config_hash(const ExperimentConfig& config)
{
    const std::string s = to_json(config).dump(); // canonical: sorted keys
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace fracwave
