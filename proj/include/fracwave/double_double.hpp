#pragma once

#include <cmath>

namespace fracwave {

/// Unevaluated double-double value hi + lo (|lo| <= ulp(hi)/2), giving
/// ~31 significant decimal digits. Only the operations needed by the
/// compensated Mittag-Leffler summation are provided.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace ddops {

inline DD two_sum(double a, double b)
{
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) // requires |a| >= |b|
{
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b)
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace ddops

inline DD operator+(const DD& a, const DD& b)
{
    using namespace ddops;
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(const DD& a, const DD& b)
{
    return a + DD(-b.hi, -b.lo);
}

inline DD operator*(const DD& a, const DD& b)
{
    using namespace ddops;
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator*(const DD& a, double b)
{
    using namespace ddops;
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(const DD& a, const DD& b)
{
    using namespace ddops;
    const double q1 = a.hi / b.hi;
    DD r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    q.lo += q3;
    return quick_two_sum(q.hi, q.lo);
}

inline DD operator/(const DD& a, double b) { return a / DD(b); }

inline bool dd_abs_less(const DD& a, const DD& b)
{
    return std::fabs(a.value()) < std::fabs(b.value());
}

} // namespace fracwave
