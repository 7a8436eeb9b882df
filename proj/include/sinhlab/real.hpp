#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

namespace sinhlab {

// Arbitrary-precision real number backed by MPFR. Each value carries its own
// mantissa precision; binary operations compute at the larger of the two
// operand precisions. Values created from literals pick up the thread-local
// default precision (see set_default_precision / PrecisionGuard).
class Real {
  public:
    Real() { mpfr_init2(v_, default_precision()); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 2);
        mpfr_swap(v_, o.v_);
    }
    Real(double d) { mpfr_init2(v_, default_precision()); mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(int i) { mpfr_init2(v_, default_precision()); mpfr_set_si(v_, i, MPFR_RNDN); }
    Real(long i) { mpfr_init2(v_, default_precision()); mpfr_set_si(v_, i, MPFR_RNDN); }
    Real(unsigned long u) { mpfr_init2(v_, default_precision()); mpfr_set_ui(v_, u, MPFR_RNDN); }
    Real(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
    // Parses a decimal string at the given (or default) precision.
    explicit Real(const std::string& s, mpfr_prec_t prec = 0) {
        mpfr_init2(v_, prec > 0 ? prec : default_precision());
        mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
    }
    ~Real() { mpfr_clear(v_); }

    Real& operator=(const Real& o) {
        if (this != &o) {
            if (mpfr_get_prec(v_) != mpfr_get_prec(o.v_)) {
                mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            }
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    Real& operator=(double d) { mpfr_set_d(v_, d, MPFR_RNDN); return *this; }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    // Re-rounds the value to a new precision.
    Real rounded_to(mpfr_prec_t prec) const {
        Real r(0.0, prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    std::string to_string(int digits = 0) const;

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    // Binary exponent of the value (0 for zero).
    long exponent() const { return is_zero() ? 0 : static_cast<long>(mpfr_get_exp(v_)); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    static mpfr_prec_t default_precision();
    static void set_default_precision(mpfr_prec_t prec);

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real operator-() const {
        Real r(0.0, precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

  private:
    mpfr_t v_;
};

// RAII guard for the thread-local default precision.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(mpfr_prec_t prec) : saved_(Real::default_precision()) {
        Real::set_default_precision(prec);
    }
    ~PrecisionGuard() { Real::set_default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    mpfr_prec_t saved_;
};

namespace detail {
inline mpfr_prec_t binprec(const Real& a, const Real& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
}
}  // namespace detail

#define SINHLAB_REAL_BINOP(op, fn)                                   \
    inline Real operator op(const Real& a, const Real& b) {          \
        Real r(0.0, detail::binprec(a, b));                          \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                    \
        return r;                                                    \
    }                                                                \
    inline Real operator op(const Real& a, double b) { return a op Real(b, a.precision()); } \
    inline Real operator op(double a, const Real& b) { return Real(a, b.precision()) op b; } \
    inline Real operator op(const Real& a, int b) { return a op Real(double(b), a.precision()); } \
    inline Real operator op(int a, const Real& b) { return Real(double(a), b.precision()) op b; }

SINHLAB_REAL_BINOP(+, mpfr_add)
SINHLAB_REAL_BINOP(-, mpfr_sub)
SINHLAB_REAL_BINOP(*, mpfr_mul)
SINHLAB_REAL_BINOP(/, mpfr_div)
#undef SINHLAB_REAL_BINOP

inline int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }
inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.raw(), b.raw()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.raw(), b.raw()) != 0; }
inline bool operator!=(const Real& a, const Real& b) { return !(a == b); }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }
inline bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) <= 0; }
inline bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) >= 0; }
inline bool operator==(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) == 0; }
inline bool operator!=(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) != 0; }
inline bool operator<(double a, const Real& b) { return b > a; }
inline bool operator>(double a, const Real& b) { return b < a; }
inline bool operator<=(double a, const Real& b) { return b >= a; }
inline bool operator>=(double a, const Real& b) { return b <= a; }

#define SINHLAB_REAL_FUN1(name, fn)              \
    inline Real name(const Real& a) {            \
        Real r(0.0, a.precision());              \
        fn(r.raw(), a.raw(), MPFR_RNDN);         \
        return r;                                \
    }

SINHLAB_REAL_FUN1(abs, mpfr_abs)
SINHLAB_REAL_FUN1(sqrt, mpfr_sqrt)
SINHLAB_REAL_FUN1(cbrt, mpfr_cbrt)
SINHLAB_REAL_FUN1(exp, mpfr_exp)
SINHLAB_REAL_FUN1(expm1, mpfr_expm1)
SINHLAB_REAL_FUN1(log, mpfr_log)
SINHLAB_REAL_FUN1(log1p, mpfr_log1p)
SINHLAB_REAL_FUN1(log2, mpfr_log2)
SINHLAB_REAL_FUN1(log10, mpfr_log10)
SINHLAB_REAL_FUN1(sin, mpfr_sin)
SINHLAB_REAL_FUN1(cos, mpfr_cos)
SINHLAB_REAL_FUN1(tan, mpfr_tan)
SINHLAB_REAL_FUN1(asin, mpfr_asin)
SINHLAB_REAL_FUN1(acos, mpfr_acos)
SINHLAB_REAL_FUN1(atan, mpfr_atan)
SINHLAB_REAL_FUN1(sinh, mpfr_sinh)
SINHLAB_REAL_FUN1(cosh, mpfr_cosh)
SINHLAB_REAL_FUN1(tanh, mpfr_tanh)
SINHLAB_REAL_FUN1(asinh, mpfr_asinh)
SINHLAB_REAL_FUN1(acosh, mpfr_acosh)
SINHLAB_REAL_FUN1(atanh, mpfr_atanh)
SINHLAB_REAL_FUN1(tgamma, mpfr_gamma)
SINHLAB_REAL_FUN1(lgamma, mpfr_lngamma)
SINHLAB_REAL_FUN1(digamma, mpfr_digamma)
SINHLAB_REAL_FUN1(erf, mpfr_erf)
SINHLAB_REAL_FUN1(erfc, mpfr_erfc)
#undef SINHLAB_REAL_FUN1

inline Real floor(const Real& a) {
    Real r(0.0, a.precision());
    mpfr_floor(r.raw(), a.raw());
    return r;
}
inline Real ceil(const Real& a) {
    Real r(0.0, a.precision());
    mpfr_ceil(r.raw(), a.raw());
    return r;
}
inline Real trunc(const Real& a) {
    Real r(0.0, a.precision());
    mpfr_trunc(r.raw(), a.raw());
    return r;
}

inline Real atan2(const Real& y, const Real& x) {
    Real r(0.0, detail::binprec(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, const Real& b) {
    Real r(0.0, detail::binprec(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, long n) {
    Real r(0.0, a.precision());
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}
inline Real pow(const Real& a, int n) { return pow(a, static_cast<long>(n)); }
inline Real hypot(const Real& a, const Real& b) {
    Real r(0.0, detail::binprec(a, b));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real fmod(const Real& a, const Real& b) {
    Real r(0.0, detail::binprec(a, b));
    mpfr_fmod(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
// a * 2^e
inline Real ldexp(const Real& a, long e) {
    Real r(0.0, a.precision());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline Real min(const Real& a, const Real& b) { return a <= b ? a : b; }
inline Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
inline bool isnan(const Real& a) { return a.is_nan(); }
inline bool isfinite(const Real& a) { return a.is_finite(); }

inline Real const_pi(mpfr_prec_t prec = 0) {
    Real r(0.0, prec > 0 ? prec : Real::default_precision());
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline Real const_euler(mpfr_prec_t prec = 0) {
    Real r(0.0, prec > 0 ? prec : Real::default_precision());
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}
inline Real const_log2(mpfr_prec_t prec = 0) {
    Real r(0.0, prec > 0 ? prec : Real::default_precision());
    mpfr_const_log2(r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace sinhlab
