#pragma once

#include "sinhlab/numerics.hpp"

#include <vector>

namespace sinhlab {

// The spectral curve attached to a map parameter x > 0: the endpoints
// s1(x) < 0 and s2(x) = 1 + 2/x, the branch point image b(x), the arc
// gamma1 in the upper half plane on which J_x is real and increases from 0
// to 2 sqrt(b), its conjugate gamma2, and the edge expansion constants
// e1(x), d1(x) of the inverse maps at 0 and b.
//
// gamma1 is parametrized analytically by tau in [0, 1] through
// v = vstar - vstar tau^2, u(v) = arcosh(x sin v / v + cos v),
// s = (cosh(u+iv)+1)/(cosh(u+iv)-1); tau = 0 gives s1, tau = 1 gives s2.
struct SpectralCurve {
    Real x;
    Real s1, s2, b;
    Real vstar;  // in (-pi, 0)
    Real e1, d1;
    ContourSamples gamma1;  // oriented s1 -> s2
    ContourSamples gamma2;  // conjugate arc, oriented s1 -> s2

    // Dense (tau, s, J) table along gamma1 for bracketing and membership.
    std::vector<Real> table_tau;
    std::vector<Complex> table_s;
    std::vector<Real> table_J;

    mpfr_prec_t precision = 256;

    // Point and velocity of the tau-parametrization of gamma1.
    Complex point(const Real& tau) const;
    Complex velocity(const Real& tau) const;
    // J_x restricted to gamma1 (real-valued) and its tau-derivative.
    Real J_on_curve(const Real& tau) const;
    Real J_on_curve_deriv(const Real& tau) const;

    // Membership test for the open region enclosed by gamma1 and gamma2,
    // decided by the half-plane the squared map sends s to.
    bool encloses(const Complex& s) const;
};

// s2(x) = 1 + 2/x.
Real s2_of(const Real& x);

// The unique negative solution of x sqrt(-s) = arccos((-s-1)/(-s+1)).
Real s1_of(const Real& x, const PrecisionContext& ctx);

// b(x) = (sqrt((x+1)^2 - 1) + arcosh(x+1))^2 / 4.
Real b_of(const Real& x);

// J_x(s) = x sqrt(s) + arcosh((s+1)/(s-1)), extended to the real axis below 1
// by the upper limit convention; scriptJ = J^2/4. Both reject s in [0, 1]
// (UndefinedOnCut).
Complex J_of(const Real& x, const Complex& s);
Complex scriptJ_of(const Real& x, const Complex& s);
// d/ds J = x/(2 sqrt(s)) - 1/(sqrt(s)(s-1)); d/ds scriptJ = J J'/2.
Complex J_deriv(const Real& x, const Complex& s);
Complex scriptJ_deriv(const Real& x, const Complex& s);

SpectralCurve build_curve(const Real& x, int n_nodes, const PrecisionContext& ctx);

// Inverse of scriptJ from C minus [0, b] onto the exterior of the curve.
Complex invert_outer(const SpectralCurve& curve, const Complex& z, const PrecisionContext& ctx);
// Inverse of scriptJ from P minus [0, b] onto the interior minus [0, 1].
Complex invert_inner(const SpectralCurve& curve, const Complex& z, const PrecisionContext& ctx);

// Boundary values on the cut: I_plus(y) on gamma1 (upper), I_minus = conj.
struct BoundaryPair {
    Complex plus;
    Complex minus;
};
BoundaryPair boundary_values(const SpectralCurve& curve, const Real& y,
                             const PrecisionContext& ctx);

// The closed contour integral over gamma = gamma1 U gamma2 with positive
// orientation, reduced to the gamma1 arc and its conjugate:
// (1/(2 pi i)) closed-integral F = value returned.
Complex gamma_cauchy_integral(const SpectralCurve& curve, const ComplexFn& f,
                              const PrecisionContext& ctx);

}  // namespace sinhlab
