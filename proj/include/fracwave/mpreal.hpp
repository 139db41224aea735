#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace fracwave {

/// Thin RAII wrapper over an mpfr_t with a fixed precision in bits.
/// Arithmetic results take the precision of the left operand. Only the
/// operations needed by the arbitrary-precision Mittag-Leffler oracle
/// are wrapped.
class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec_bits = 256) { mpfr_init2(v_, prec_bits); mpfr_set_zero(v_, 1); }
    MpReal(double x, mpfr_prec_t prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_d(v_, x, MPFR_RNDN); }
    MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpReal(MpReal&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    MpReal& operator=(const MpReal& o)
    {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept
    {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    MpReal& operator+=(const MpReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpReal& operator-=(const MpReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpReal& operator*=(const MpReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpReal& operator/=(const MpReal& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    MpReal& operator*=(double x) { mpfr_mul_d(v_, v_, x, MPFR_RNDN); return *this; }
    MpReal& operator/=(double x) { mpfr_div_d(v_, v_, x, MPFR_RNDN); return *this; }

    friend MpReal operator+(MpReal a, const MpReal& b) { a += b; return a; }
    friend MpReal operator-(MpReal a, const MpReal& b) { a -= b; return a; }
    friend MpReal operator*(MpReal a, const MpReal& b) { a *= b; return a; }
    friend MpReal operator/(MpReal a, const MpReal& b) { a /= b; return a; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int cmp_abs(const MpReal& o) const { return mpfr_cmpabs(v_, o.v_); }

    MpReal abs() const { MpReal r(prec()); mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }

    /// Gamma(this). Caller must avoid the poles.
    MpReal gamma() const { MpReal r(prec()); mpfr_gamma(r.v_, v_, MPFR_RNDN); return r; }

    /// 10^e at this value's precision.
    static MpReal pow10(long e, mpfr_prec_t prec_bits)
    {
        MpReal r(prec_bits);
        mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
        if (e < 0) mpfr_d_div(r.v_, 1.0, r.v_, MPFR_RNDN);
        return r;
    }

    std::string str(int digits) const
    {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t v_;
};

} // namespace fracwave
