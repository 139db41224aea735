#include "fracwave/mlf.hpp"

#include "fracwave/double_double.hpp"
#include "fracwave/gamma.hpp"
#include "fracwave/mpreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace fracwave {

namespace detail {
double mlf_series_mp(double alpha, double beta, double z, int digits);
}

namespace {

void check_params(const MlfParams& p)
{
    if (!(p.alpha > 0.0) || !(p.alpha <= 2.0) || !std::isfinite(p.beta))
        throw std::domain_error("mlf: alpha must lie in (0,2]");
}

bool is_nonpositive_integer(double x)
{
    return x <= 0.0 && x == std::floor(x);
}

// Largest power-of-two stride q <= 64 such that alpha*q is an integer.
// Scaling a double by a power of two is exact, so the test is exact.
int dyadic_stride(double alpha)
{
    for (int q = 1; q <= 64; q *= 2) {
        const double m = alpha * q;
        if (m == std::floor(m))
            return q;
    }
    return 0;
}

DD dd_from_mpfr_gamma(double x, bool* pole)
{
    *pole = false;
    if (is_nonpositive_integer(x)) {
        *pole = true;
        return DD(0.0);
    }
    const mpfr_prec_t prec = 160; // ~48 digits, ample for a DD seed
    MpReal g = MpReal(x, prec).gamma();
    const double hi = g.to_double();
    MpReal rest = g - MpReal(hi, prec);
    return DD(hi, rest.to_double());
}

// Seed terms z-independent part: 1/Gamma(alpha*j + beta), j = 0..q-1,
// cached per (alpha, beta, q).
const std::vector<DD>& seed_rgammas(double alpha, double beta, int q)
{
    struct Key {
        std::uint64_t a, b;
        int q;
        bool operator<(const Key& o) const
        {
            return std::tie(a, b, q) < std::tie(o.a, o.b, o.q);
        }
    };
    static std::map<Key, std::vector<DD>> cache;
    static std::mutex mtx;

    std::uint64_t abits, bbits;
    std::memcpy(&abits, &alpha, 8);
    std::memcpy(&bbits, &beta, 8);
    const Key key{abits, bbits, q};

    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;

    std::vector<DD> seeds(q);
    for (int j = 0; j < q; ++j) {
        bool pole = false;
        DD g = dd_from_mpfr_gamma(alpha * j + beta, &pole);
        seeds[j] = pole ? DD(0.0) : DD(1.0) / g;
    }
    return cache.emplace(key, std::move(seeds)).first->second;
}

// Plain double Taylor for |z| <= 1 (no cancellation growth there).
double taylor_small(double alpha, double beta, double z)
{
    double sum = 0.0;
    double zp = 1.0;
    for (int k = 0; k < 400; ++k) {
        const double t = zp * rgamma(alpha * k + beta);
        sum += t;
        zp *= z;
        if (std::fabs(zp) * rgamma(alpha * (k + 1) + beta) < 1e-18 && k > 4 &&
            alpha * k + beta > 2.0)
            break;
    }
    return sum;
}

// Compensated double-double Taylor using the stride-q term recurrence
//   t_{k+q} = t_k * z^q / prod_{i=0}^{m-1} (alpha*k + beta + i),  m = alpha*q,
// which only needs Gamma at the q seed indices. The stride factors are
// assembled in DD from exact two_prod/two_sum pieces, so every term keeps
// ~31 digits and the summation survives the e^{|z|^{1/alpha}} cancellation
// up to the crossover.
double taylor_dd(double alpha, double beta, double z)
{
    const int q = dyadic_stride(alpha);
    if (q == 0) {
        // alpha has no short exact stride (e.g. 1.01): delegate to the
        // arbitrary-precision path at double-target digits.
        return detail::mlf_series_mp(alpha, beta, z, 30);
    }
    const int m = static_cast<int>(alpha * q);
    const auto& rg = seed_rgammas(alpha, beta, q);

    // z^q as DD
    DD zq(1.0);
    for (int i = 0; i < q; ++i)
        zq = zq * z;

    std::vector<DD> term(q);
    DD zp(1.0);
    for (int j = 0; j < q; ++j) {
        term[j] = zp * rg[j];
        zp = zp * z;
    }

    DD sum(0.0);
    double max_abs = 0.0;
    const double hump = std::pow(std::fabs(z), 1.0 / alpha);
    for (int k = 0; k < 200000; ++k) {
        const int j = k % q;
        if (k >= q) {
            if (term[j].hi == 0.0 && alpha * k + beta < 3.0) {
                // a Gamma pole zeroed this residue class earlier; restart it
                // from a fresh seed once the argument has left the poles
                bool pole = false;
                DD g = dd_from_mpfr_gamma(alpha * k + beta, &pole);
                if (pole) {
                    term[j] = DD(0.0);
                } else {
                    DD t = DD(1.0) / g;
                    for (int i = 0; i < k; ++i)
                        t = t * z;
                    term[j] = t;
                }
            } else if (term[j].hi != 0.0) {
                const int kprev = k - q;
                DD t = term[j] * zq;
                for (int i = 0; i < m; ++i) {
                    // factor alpha*kprev + beta + i, exact in DD
                    DD f = ddops::two_prod(alpha, static_cast<double>(kprev));
                    f = f + DD(beta);
                    f = f + DD(static_cast<double>(i));
                    t = t / f;
                }
                term[j] = t;
            }
        }
        sum = sum + term[j];
        const double ta = std::fabs(term[j].value());
        max_abs = std::max(max_abs, ta);
        if (!std::isfinite(max_abs))
            throw std::overflow_error("mlf: series term overflow");
        if (alpha * k > hump + 8.0 && ta < 0x1p-108 * max_abs)
            break;
    }
    return sum.value();
}

// Algebraic asymptotic series with smallest-term truncation (K <= 20)
// plus the conjugate exponential pair for alpha in (1,2). x = -z > 0.
double asymptotic_neg(double alpha, double beta, double x)
{
    double sum = 0.0;
    double last = std::numeric_limits<double>::infinity();
    double xpk = 1.0; // x^k
    for (int k = 1; k <= 20; ++k) {
        xpk *= x;
        const double g = rgamma(beta - alpha * k);
        if (g == 0.0)
            continue; // Gamma pole: term is exactly zero
        const double t = ((k % 2 == 0) ? -1.0 : 1.0) * g / xpk;
        if (std::fabs(t) >= std::fabs(last))
            break; // past the smallest term; stop before divergence
        sum += t;
        last = t;
    }

    if (alpha > 1.0) {
        const double xr = std::pow(x, 1.0 / alpha);
        const double re_w = xr * std::cos(M_PI / alpha);
        const double im_w = xr * std::sin(M_PI / alpha);
        const double amp =
            (2.0 / alpha) * std::pow(x, (1.0 - beta) / alpha) * std::exp(re_w);
        sum += amp * std::cos(im_w + M_PI * (1.0 - beta) / alpha);
    } else if (alpha == 1.0 && beta == std::floor(beta)) {
        const long long p = static_cast<long long>(1.0 - beta);
        const double sign = (p % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::pow(x, 1.0 - beta) * std::exp(-x);
    }
    return sum;
}

double alpha2_closed_form(double beta, double z)
{
    if (z < 0.0) {
        const double s = std::sqrt(-z);
        if (beta == 1.0)
            return std::cos(s);
        return std::sin(s) / s; // beta == 2
    }
    const double s = std::sqrt(z);
    if (s > 700.0)
        throw std::overflow_error("mlf: cosh/sinh overflow");
    if (beta == 1.0)
        return std::cosh(s);
    return std::sinh(s) / s;
}

} // namespace

double mlf_crossover(double alpha)
{
    return std::pow(36.0, std::max(1.0, alpha));
}

double mlf(const MlfParams& params, double z)
{
    check_params(params);
    const double alpha = params.alpha;
    const double beta = params.beta;
    if (std::fabs(z) > 1e6)
        throw std::domain_error("mlf: |z| > 1e6 unsupported");
    if (z == 0.0)
        return rgamma(beta);

    if (alpha == 2.0 && (beta == 1.0 || beta == 2.0) && std::fabs(z) > 1.0)
        return alpha2_closed_form(beta, z);
    if (alpha == 2.0 && std::fabs(z) > 2500.0)
        throw std::overflow_error("mlf: alpha=2 with general beta loses all "
                                  "precision for |z| > 2500");

    if (std::fabs(z) <= 1.0)
        return taylor_small(alpha, beta, z);

    if (z < 0.0 && alpha < 2.0 && -z >= mlf_crossover(alpha))
        return asymptotic_neg(alpha, beta, -z);

    return taylor_dd(alpha, beta, z);
}

} // namespace fracwave
