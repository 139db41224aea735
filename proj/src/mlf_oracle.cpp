#include "fracwave/mlf.hpp"
#include "fracwave/mpreal.hpp"

#include <cmath>
#include <stdexcept>

namespace fracwave {

namespace detail {

// Taylor summation of the definition in MPFR arithmetic. No range checks;
// the public mlf_oracle applies the documented preconditions.
double mlf_series_mp(double alpha, double beta, double z, int digits)
{
    // For z < 0 the partial sums peak near exp(|z|^{1/alpha}); reserve the
    // digits that cancellation will eat on top of the requested accuracy.
    const double hump = std::pow(std::fabs(z), 1.0 / alpha);
    const int cancel = (z < 0.0) ? static_cast<int>(hump * 0.4342944819 + 1.0) : 0;
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>((digits + cancel + 20) * 3.3219280949 + 16.0);

    const MpReal z_mp(z, prec);
    const MpReal alpha_mp(alpha, prec);
    const MpReal beta_mp(beta, prec);
    const MpReal tail_cut = MpReal::pow10(-(digits + 2), prec);

    MpReal sum(prec);
    MpReal zp(1.0, prec);
    MpReal prev_abs(prec);
    for (int k = 0; k < 100000; ++k) {
        MpReal x = alpha_mp * MpReal(static_cast<double>(k), prec) + beta_mp;
        const bool pole = x.to_double() <= 0.25 && x.is_integer();
        MpReal term(prec);
        if (!pole)
            term = zp / x.gamma();
        sum += term;
        zp *= z_mp;

        const MpReal ta = term.abs();
        const bool past_hump = alpha * k > hump + 8.0;
        const bool shrinking = k > 0 && (ta.is_zero() || ta.cmp_abs(prev_abs) < 0);
        if (past_hump && shrinking && ta.cmp_abs(tail_cut) < 0)
            return sum.to_double();
        prev_abs = ta;
    }
    throw std::runtime_error("mlf_oracle: series did not converge in 1e5 terms");
}

} // namespace detail

double mlf_oracle(const MlfParams& params, double z, int digits)
{
    if (!(params.alpha > 0.0) || !(params.alpha <= 2.0))
        throw std::domain_error("mlf_oracle: alpha must lie in (0,2]");
    if (std::fabs(z) > 1e3)
        throw std::domain_error("mlf_oracle: |z| <= 1e3 required");
    if (digits < 30)
        throw std::domain_error("mlf_oracle: digits >= 30 required");
    return detail::mlf_series_mp(params.alpha, params.beta, z, digits);
}

} // namespace fracwave
