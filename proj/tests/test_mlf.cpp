#include "doctest.h"

#include "fracwave/gamma.hpp"
#include "fracwave/mlf.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace fracwave;

namespace {

double rel_err(double got, double want)
{
    const double scale = std::max(std::fabs(want), 1e-300);
    return std::fabs(got - want) / scale;
}

// log-spaced grid including 0
std::vector<double> log_grid(double lo, double hi, int n)
{
    std::vector<double> g{0.0};
    for (int i = 0; i < n; ++i)
        g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    return g;
}

} // namespace

TEST_CASE("gamma function basics")
{
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
    CHECK(rgamma(0.0) == 0.0);
    CHECK(rgamma(-3.0) == 0.0);
    CHECK(rgamma(-9.5) == doctest::Approx(1.0 / gamma_fn(-9.5)).epsilon(1e-12));
    // reflection vs std library on a sweep
    for (double x = -20.25; x < 20.0; x += 0.5)
        CHECK(rel_err(gamma_fn(x), std::tgamma(x)) < 1e-12);
}

TEST_CASE("closed-form identities")
{
    // E_{1,1}(z) = exp(z)
    CHECK(mlf({1.0, 1.0}, 1.0) == doctest::Approx(M_E).epsilon(1e-12));
    // E_{2,1}(-1) = cos(1)
    CHECK(mlf({2.0, 1.0}, -1.0) == doctest::Approx(std::cos(1.0)).epsilon(1e-12));

    // 100-point grids, 1e-10 absolute (the acceptance form)
    for (int i = 0; i < 100; ++i) {
        const double x = 50.0 * (i + 1) / 100.0; // (0, 50]
        CHECK(std::fabs(mlf({1.0, 1.0}, -x) - std::exp(-x)) < 1e-10);
        CHECK(std::fabs(mlf({1.0, 2.0}, -x) - (1.0 - std::exp(-x)) / x) < 1e-10);
        const double y = 1000.0 * (i + 1) / 100.0; // (0, 1000]
        const double s = std::sqrt(y);
        CHECK(std::fabs(mlf({2.0, 1.0}, -y) - std::cos(s)) < 1e-10);
        CHECK(std::fabs(mlf({2.0, 2.0}, -y) - std::sin(s) / s) < 1e-10);
    }
}

TEST_CASE("oracle closed forms and frozen high-precision values")
{
    // E_{2,2}(-4) = sin(2)/2
    CHECK(rel_err(mlf_oracle({2.0, 2.0}, -4.0, 40), std::sin(2.0) / 2.0) < 1e-14);
    // E_{1,2}(1) = e - 1
    CHECK(rel_err(mlf_oracle({1.0, 2.0}, 1.0, 40), M_E - 1.0) < 1e-14);

    // frozen reference values (80-digit Taylor summation, cross-checked
    // against the asymptotic expansion for the second one)
    CHECK(rel_err(mlf_oracle({1.5, 2.0}, -3.0, 50),
                  0.392729633672170535685890606557) < 1e-14);
    CHECK(rel_err(mlf_oracle({1.25, 1.0}, -50.0, 50),
                  -0.00425727940858546818731251494163) < 1e-14);

    CHECK_THROWS_AS(mlf_oracle({1.5, 1.0}, -2000.0, 40), std::domain_error);
    CHECK_THROWS_AS(mlf_oracle({1.5, 1.0}, -2.0, 10), std::domain_error);
}

TEST_CASE("production evaluator matches frozen values")
{
    CHECK(rel_err(mlf({1.5, 2.0}, -3.0), 0.392729633672170535685890606557) < 1e-9);
    CHECK(rel_err(mlf({1.25, 1.0}, -50.0), -0.00425727940858546818731251494163) < 1e-9);
}

TEST_CASE("E(0) = 1/Gamma(beta)")
{
    for (double beta : {1.0, 2.0, 0.5, 1.75, 0.25, -0.5})
        for (double alpha : {0.5, 1.0, 1.25, 1.5, 1.75, 2.0})
            CHECK(mlf({alpha, beta}, 0.0) == rgamma(beta));
}

TEST_CASE("regime consistency: production vs oracle across crossovers")
{
    for (double alpha : {1.25, 1.5, 1.75}) {
        const double zc = mlf_crossover(alpha);
        for (double beta : {1.0, 2.0, alpha, alpha - 1.0}) {
            auto grid = log_grid(1e-3, 500.0, 28);
            // straddle every internal regime boundary
            grid.push_back(0.999);
            grid.push_back(1.001);
            if (zc < 995.0) {
                grid.push_back(zc * 0.995);
                grid.push_back(zc * 1.005);
            }
            for (double x : grid) {
                if (x > 1e3)
                    continue;
                const double got = mlf({alpha, beta}, -x);
                const double want = mlf_oracle({alpha, beta}, -x, 40);
                INFO("alpha=", alpha, " beta=", beta, " x=", x);
                CHECK(rel_err(got, want) < 1e-9);
            }
        }
    }
}

TEST_CASE("asymptotic bound |E(-x)|*(1+x) stays bounded")
{
    // Single constant across all combinations and a log sweep to 1e4.
    double worst = 0.0;
    for (double alpha : {1.25, 1.5, 1.75})
        for (double beta : {1.0, 2.0, alpha, alpha - 1.0})
            for (double x : log_grid(1e-2, 1e4, 60)) {
                const double v = std::fabs(mlf({alpha, beta}, -x)) * (1.0 + x);
                worst = std::max(worst, v);
            }
    CHECK(worst < 25.0);
}

TEST_CASE("domain errors")
{
    CHECK_THROWS_AS(mlf({2.5, 1.0}, -1.0), std::domain_error);
    CHECK_THROWS_AS(mlf({0.0, 1.0}, -1.0), std::domain_error);
    CHECK_THROWS_AS(mlf({1.5, 1.0}, -2e6), std::domain_error);
}
