#pragma once

#include "sinhlab/complex.hpp"
#include "sinhlab/errors.hpp"
#include "sinhlab/real.hpp"

#include <string>

namespace sinhlab {

// 2x2 complex matrix.
struct Mat2 {
    Complex a, b, c, d;  // [[a, b], [c, d]]

    Complex det() const { return a * d - b * c; }
    Mat2 inverse() const {
        Complex dt = det();
        return Mat2{d / dt, -b / dt, -c / dt, a / dt};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    Real max_abs() const { return max(max(abs(a), abs(b)), max(abs(c), abs(d))); }
};

// Local model solution evaluated in one argument sector.
struct ParametrixMatrix {
    Mat2 entries;
    std::string sector;
};

// f(z) = sinh^2(sqrt(z)), entire (even in sqrt(z)); series near 0 avoids the
// cancellation in cosh(2 sqrt(z))/2 - 1/2.
Complex map_f(const Complex& z);
Real map_f(const Real& x);
// f'(z) = sinh(sqrt(z)) cosh(sqrt(z)) / sqrt(z), removable singularity at 0.
Complex map_f_deriv(const Complex& z);
Real map_f_deriv(const Real& x);

// Principal inverse cosh: the one-to-one map from C minus (-inf, 1] onto
// {Re > 0, -pi < Im < pi}. Throws BranchCut on the cut.
Complex arcosh_principal(const Complex& z);

// Airy function and derivative: Maclaurin series with self-validating
// precision escalation; Poincare expansion once its optimal truncation beats
// the target tolerance. Accurate to the argument's precision.
Complex airy_ai(const Complex& z);
Complex airy_ai_deriv(const Complex& z);
Real airy_ai(const Real& x);
Real airy_ai_deriv(const Real& x);

enum class BesselKind { J, I, K, H1, H2 };

// Bessel functions of order alpha > -1 at complex argument. K, H1, H2 and Y
// are cut along (-inf, 0] (BranchCut there). Integer orders route through the
// logarithmic series; non-integer through the reflection formulas.
Complex bessel(BesselKind kind, const Real& alpha, const Complex& z);
Complex bessel_deriv(BesselKind kind, const Real& alpha, const Complex& z);

// Airy model Riemann-Hilbert solution, sector-dispatched on arg(zeta) against
// the rays {0, +-2pi/3, pi}. Throws OnContour within angle 1e-12 of a ray.
ParametrixMatrix psi_airy(const Complex& zeta);

// Bessel model Riemann-Hilbert solution of order alpha, rays {+-2pi/3, pi}.
ParametrixMatrix psi_bessel(const Real& alpha, const Complex& zeta);

// e^{2 pi i/3}
Complex unit_omega(mpfr_prec_t prec = 0);

}  // namespace sinhlab
