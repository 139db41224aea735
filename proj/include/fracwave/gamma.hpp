#pragma once

namespace fracwave {

/// Gamma function for real arguments (Lanczos approximation, reflection
/// for x < 0.5). Returns +/-inf at the poles x = 0, -1, -2, ...
double gamma_fn(double x);

/// Reciprocal gamma 1/Gamma(x). Entire: returns exactly 0 at the poles,
/// so series terms with Gamma at non-positive integers drop out naturally.
double rgamma(double x);

/// sin(pi*x) with argument reduction against the nearest integer, so the
/// zeros at integer x are exact even for |x| >> 1.
double sin_pi(double x);

} // namespace fracwave
