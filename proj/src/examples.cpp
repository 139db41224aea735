#include "fracwave/examples.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace fracwave {

namespace {

double hat_datum(double x)
{
    return x <= M_PI / 2.0 ? x : M_PI - x;
}

double datum_2d(double x, double y)
{
    return std::log(1.0 + 10.0 * x) * (x - 1.0) * std::pow(std::sin(M_PI * y), 0.75);
}

std::map<std::string, ExampleDef> make_catalog()
{
    std::map<std::string, ExampleDef> c;

    ExampleDef ex1a;
    ex1a.name = "ex1a";
    ex1a.domain = Domain::Interval;
    ex1a.a1 = [](Point p) { return std::sin(p.x); };
    ex1a.alpha = 1.5;
    ex1a.forward_cells = 200;
    ex1a.ref_N = 2048;
    c["ex1a"] = ex1a;

    ExampleDef ex1b = ex1a;
    ex1b.name = "ex1b";
    ex1b.a1 = [](Point p) { return hat_datum(p.x); };
    c["ex1b"] = ex1b;

    ExampleDef ex2a = ex1a;
    ex2a.name = "ex2a";
    ex2a.backward = true;
    ex2a.alpha = 1.5;
    ex2a.sigma = 0.05;
    ex2a.n_obs = 11;
    ex2a.recon_cells = 20;
    ex2a.recon_N = 2048;
    c["ex2a"] = ex2a;

    ExampleDef ex2b = ex2a;
    ex2b.name = "ex2b";
    ex2b.a1 = [](Point p) { return hat_datum(p.x); };
    ex2b.sigma = 0.015;
    ex2b.n_obs = 199;
    c["ex2b"] = ex2b;

    ExampleDef ex3;
    ex3.name = "ex3";
    ex3.domain = Domain::UnitSquare;
    ex3.length = 1.0;
    ex3.a1 = [](Point p) { return datum_2d(p.x, p.y); };
    ex3.alpha = 1.25;
    ex3.forward_cells = 30;
    ex3.ref_N = 1280;
    c["ex3"] = ex3;

    ExampleDef ex4 = ex3;
    ex4.name = "ex4";
    ex4.backward = true;
    ex4.alpha = 1.25;
    ex4.sigma = 0.01;
    ex4.n_obs = 841;
    ex4.recon_cells = 30;
    ex4.recon_N = 160;
    ex4.ref_N = 320; // data-generation time grid (finer than reconstruction)
    c["ex4"] = ex4;

    return c;
}

} // namespace

const std::vector<std::string>& example_names()
{
    static const std::vector<std::string> names = {"ex1a", "ex1b", "ex2a",
                                                   "ex2b", "ex3", "ex4"};
    return names;
}

const ExampleDef& get_example(const std::string& name)
{
    static const std::map<std::string, ExampleDef> catalog = make_catalog();
    const auto it = catalog.find(name);
    if (it == catalog.end())
        throw std::invalid_argument("unknown example: " + name);
    return it->second;
}

} // namespace fracwave
