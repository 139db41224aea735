#pragma once

#include "fracwave/fem.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace fracwave {

/// Built-in problem catalog: the 1D/2D forward and backward benchmark
/// setups with their canonical discretizations (T = 0.1 throughout).
struct ExampleDef {
    std::string name;
    Domain domain = Domain::Interval;
    double length = M_PI; ///< 1D interval length; 1 for the unit square
    ScalarFn a1;
    bool backward = false;

    double alpha = 1.5;  ///< canonical order (forward tables vary it)
    double sigma = 0.0;  ///< canonical noise level (backward only)
    int n_obs = 0;       ///< canonical observation count (backward only)

    int forward_cells = 200; ///< table / data-generation space grid
    int ref_N = 2048;        ///< reference (or data-generation) time steps

    int recon_cells = 0; ///< reconstruction grid (backward only)
    int recon_N = 0;     ///< reconstruction time steps (backward only)
};

const std::vector<std::string>& example_names();
const ExampleDef& get_example(const std::string& name);

} // namespace fracwave
