#include "fracwave/gamma.hpp"

#include <cmath>
#include <limits>

namespace fracwave {

namespace {

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Gamma(x) for x >= 0.5.
double gamma_positive(double x)
{
    const double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        a += kLanczos[i] / (z + i);
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

} // namespace

double sin_pi(double x)
{
    const double r = x - std::nearbyint(x);
    const double s = std::sin(M_PI * r);
    // nearbyint flips sign of sin(pi x) for odd integers
    const long long n = static_cast<long long>(std::nearbyint(x));
    return (n % 2 == 0) ? s : -s;
}

double gamma_fn(double x)
{
    if (x >= 0.5)
        return gamma_positive(x);
    if (x == std::floor(x)) // pole
        return std::numeric_limits<double>::infinity();
    // reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x))
    return M_PI / (sin_pi(x) * gamma_positive(1.0 - x));
}

double rgamma(double x)
{
    if (x >= 0.5)
        return 1.0 / gamma_positive(x);
    if (x == std::floor(x))
        return 0.0;
    return sin_pi(x) * gamma_positive(1.0 - x) / M_PI;
}

} // namespace fracwave
