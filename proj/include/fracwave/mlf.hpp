#pragma once

namespace fracwave {

/// Parameters of the two-parameter Mittag-Leffler function E_{alpha,beta}.
struct MlfParams {
    double alpha; ///< order, must lie in (0, 2]
    double beta;  ///< second parameter, any real
};

/// Evaluate E_{alpha,beta}(z) for real z.
///
/// Primary supported range is z <= 0 with |z| <= 1e6; positive z is
/// accepted where the Taylor series converges without overflow (used by
/// the alpha = 1, 2 identity checks). Accuracy target: 1e-9 relative
/// against mlf_oracle on the negative axis.
///
/// Three regimes: plain Taylor for |z| <= 1, compensated double-double
/// Taylor with a stride recurrence up to the crossover, and beyond it the
/// algebraic asymptotic series plus the conjugate pair of exponential
/// terms (the pair decays slowly for alpha near 2 and cannot be dropped).
///
/// Throws std::domain_error for alpha outside (0,2] or |z| > 1e6,
/// std::overflow_error when the result exceeds the double range.
double mlf(const MlfParams& params, double z);

/// Crossover point |z| between the series and asymptotic regimes.
double mlf_crossover(double alpha);

/// Reference evaluation by summing the defining Taylor series in
/// arbitrary-precision (MPFR) arithmetic until the tail drops below
/// 10^(-digits), with working precision enlarged by a cancellation
/// estimate. Test oracle; independent of the mlf() code paths.
///
/// Requires |z| <= 1e3 and digits >= 30. Throws std::runtime_error if
/// 1e5 terms do not reach the requested tail.
double mlf_oracle(const MlfParams& params, double z, int digits);

} // namespace fracwave
