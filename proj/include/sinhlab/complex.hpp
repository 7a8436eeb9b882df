#pragma once

#include "sinhlab/real.hpp"

#include <string>

namespace sinhlab {

// Complex number over Real. All multivalued functions (sqrt, log, pow, arg)
// take the principal branch with the cut on the negative real axis,
// arg in (-pi, pi].
struct Complex {
    Real re, im;

    Complex() : re(0.0), im(0.0) {}
    Complex(const Real& r) : re(r), im(0.0, r.precision()) {}
    Complex(double r) : re(r), im(0.0) {}
    Complex(int r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(double r, double i) : re(r), im(i) {}

    mpfr_prec_t precision() const { return detail::binprec(re, im); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    Complex operator-() const { return Complex(-re, -im); }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }
    Complex& operator/=(const Complex& o) { *this = *this / o; return *this; }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return Complex(a.re + b.re, a.im + b.im);
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return Complex(a.re - b.re, a.im - b.im);
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        // Smith's algorithm, stable for large/small components.
        if (abs(b.re) >= abs(b.im)) {
            Real r = b.im / b.re;
            Real d = b.re + b.im * r;
            return Complex((a.re + a.im * r) / d, (a.im - a.re * r) / d);
        }
        Real r = b.re / b.im;
        Real d = b.re * r + b.im;
        return Complex((a.re * r + a.im) / d, (a.im * r - a.re) / d);
    }

    std::string to_string(int digits = 0) const {
        return "(" + re.to_string(digits) + ", " + im.to_string(digits) + ")";
    }
};

inline Complex operator+(const Complex& a, const Real& b) { return a + Complex(b); }
inline Complex operator+(const Real& a, const Complex& b) { return Complex(a) + b; }
inline Complex operator-(const Complex& a, const Real& b) { return a - Complex(b); }
inline Complex operator-(const Real& a, const Complex& b) { return Complex(a) - b; }
inline Complex operator*(const Complex& a, const Real& b) { return Complex(a.re * b, a.im * b); }
inline Complex operator*(const Real& a, const Complex& b) { return Complex(a * b.re, a * b.im); }
inline Complex operator/(const Complex& a, const Real& b) { return Complex(a.re / b, a.im / b); }
inline Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
inline Complex operator+(const Complex& a, double b) { return a + Complex(b); }
inline Complex operator+(double a, const Complex& b) { return Complex(a) + b; }
inline Complex operator-(const Complex& a, double b) { return a - Complex(b); }
inline Complex operator-(double a, const Complex& b) { return Complex(a) - b; }
inline Complex operator*(const Complex& a, double b) { return a * Real(b); }
inline Complex operator*(double a, const Complex& b) { return Real(a) * b; }
inline Complex operator/(const Complex& a, double b) { return a / Real(b); }
inline Complex operator/(double a, const Complex& b) { return Complex(a) / b; }

inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex polar(const Real& r, const Real& theta) {
    return Complex(r * cos(theta), r * sin(theta));
}

inline Complex sqrt(const Complex& z) {
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return Complex(sqrt(z.re), Real(0.0, z.precision()));
        // Negative real axis: principal value i*sqrt(|x|) (upper side).
        return Complex(Real(0.0, z.precision()), sqrt(-z.re));
    }
    Real m = abs(z);
    Real u = sqrt((m + abs(z.re)) / 2);
    Real v = z.im / (2 * u);
    if (z.re.sign() >= 0) return Complex(u, v);
    return Complex(abs(v), z.im.sign() >= 0 ? u : -u);
}

inline Complex log(const Complex& z) { return Complex(log(abs(z)), arg(z)); }

inline Complex exp(const Complex& z) {
    Real e = exp(z.re);
    return Complex(e * cos(z.im), e * sin(z.im));
}

inline Complex pow(const Complex& z, const Real& a) {
    if (z.im.is_zero() && z.re.sign() > 0) return Complex(pow(z.re, a));
    return exp(a * log(z));
}
inline Complex pow(const Complex& z, const Complex& a) { return exp(a * log(z)); }
inline Complex pow(const Complex& z, int n) {
    if (n == 0) return Complex(1.0);
    Complex base = n > 0 ? z : 1.0 / z;
    unsigned long m = n > 0 ? static_cast<unsigned long>(n) : 0ul - static_cast<unsigned long>(n);
    Complex r(1.0);
    while (m) {
        if (m & 1ul) r *= base;
        base *= base;
        m >>= 1;
    }
    return r;
}

inline Complex sin(const Complex& z) {
    return Complex(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im));
}
inline Complex cos(const Complex& z) {
    return Complex(cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im));
}
inline Complex sinh(const Complex& z) {
    return Complex(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im));
}
inline Complex cosh(const Complex& z) {
    return Complex(cosh(z.re) * cos(z.im), sinh(z.re) * sin(z.im));
}

// Fixed-precision helpers for mixed expressions.
inline Complex rounded_to(const Complex& z, mpfr_prec_t prec) {
    return Complex(z.re.rounded_to(prec), z.im.rounded_to(prec));
}

}  // namespace sinhlab
