#include "doctest.h"

#include "sinhlab/equilibrium.hpp"
#include "sinhlab/specialfn.hpp"

#include <cmath>

using namespace sinhlab;

namespace {
const PrecisionContext kCtx = PrecisionContext::make();
double dbl(const Real& r) { return r.to_double(); }

const EquilibriumMeasure& measure_m1() {
    static EquilibriumMeasure m = build_measure(Potential::linear(Real(1.0)), 128, kCtx);
    return m;
}
}  // namespace

TEST_CASE("F is linear in x for linear potentials and monotone in general") {
    Potential lin = Potential::linear(Real(2.0));  // V = x/2
    CHECK(dbl(abs(F_of(Real(1.0), lin, kCtx) - 0.5)) < 1e-12);
    CHECK(dbl(abs(F_of(Real(4.0), lin, kCtx) - 2.0)) < 1e-12);

    Potential quad = Potential::poly({Real(0.0), Real(1.0)});  // V = x^2
    Real f1 = F_of(Real(0.4), quad, kCtx);
    Real f2 = F_of(Real(0.8), quad, kCtx);
    Real f3 = F_of(Real(1.6), quad, kCtx);
    CHECK(f1 < f2);
    CHECK(f2 < f3);
}

TEST_CASE("solve_c closed forms and self-consistency") {
    Real c1 = solve_c(Potential::linear(Real(1.0)), kCtx);
    CHECK(dbl(abs(c1 - 2) / 2) < 1e-10);
    Real c2 = solve_c(Potential::linear(Real(0.25)), kCtx);
    CHECK(dbl(abs(c2 - 0.5) / 0.5) < 1e-10);

    // General potential: verify the defining equation on an independent,
    // finer contour discretization.
    Potential quad = Potential::poly({Real(0.0), Real(1.0)});
    Real c = solve_c(quad, kCtx);
    SpectralCurve fine = build_curve(c, 2048, kCtx);
    CHECK(dbl(abs(F_of(fine, quad, kCtx) - 2)) < 1e-10);
}

TEST_CASE("F_kernel positivity and diagonal blowup") {
    const EquilibriumMeasure& m = measure_m1();
    struct Lcg {
        unsigned long long s = 12345;
        double next() {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            return double(s >> 11) * (1.0 / 9007199254740992.0);
        }
    } rng;
    for (int i = 0; i < 100; ++i) {
        Real u = m.b * Real(0.02 + 0.96 * rng.next());
        Real xi = m.b * Real(0.02 + 0.96 * rng.next());
        if (u == xi) continue;
        CHECK(F_kernel(m.curve, u, xi, kCtx) > 0.0);
    }
    // Log blowup at the diagonal: F / log(1/|u - xi|) tends to a positive
    // constant as u -> xi.
    Real xi = m.b / 3;
    Real r1 = F_kernel(m.curve, xi + Real(1e-6), xi, kCtx) / log(Real(1e6));
    Real r2 = F_kernel(m.curve, xi + Real(1e-9), xi, kCtx) / log(Real(1e9));
    CHECK(r1 > 0.0);
    CHECK(dbl(abs(r2 / r1 - 1)) < 0.01);

    // Finite at u -> 0 off the diagonal.
    CHECK(F_kernel(m.curve, m.b * Real(1e-9), xi, kCtx) < 10.0);
    CHECK_THROWS_AS(F_kernel(m.curve, xi, xi, kCtx), CoincidentPoints);
}

TEST_CASE("general quadrature density matches the linear closed form") {
    const EquilibriumMeasure& m = measure_m1();
    Potential lin = Potential::linear(Real(1.0));
    for (double t : {0.02, 0.2, 0.5, 0.77, 0.98}) {
        Real x = m.b * t;
        Real general = density_psi(m.curve, lin, x, kCtx);
        Complex ip = boundary_values(m.curve, x, kCtx).plus;
        Real closed = sqrt(ip / Complex(x)).im / const_pi();
        CHECK(dbl(abs(general / closed - 1)) < 1e-6);
    }
}

TEST_CASE("measure invariants: mass, positivity, Euler-Lagrange") {
    const EquilibriumMeasure& m = measure_m1();
    Real mass = m.integrate_mu([](const Real&) { return Real(1.0); }, kCtx);
    CHECK(dbl(abs(mass - 1)) < 1e-8);

    for (const auto& [x, p] : m.psi_grid()) CHECK(p > 0.0);

    // Euler-Lagrange residual at interior points.
    for (double t : {0.25, 0.5, 0.75}) {
        Real x = m.b * t;
        Real res = m.g_log_abs(x, kCtx) + m.g_tilde_log_abs(x, kCtx) - m.pot(x) - m.ell;
        CHECK(dbl(abs(res)) < 1e-7);
    }

    // Effective potential strictly negative beyond the support.
    for (double t : {1.5, 2.0, 4.0, 8.0, 16.0}) {
        Complex p = m.phi(Complex(m.b * t), kCtx);
        CHECK(p.im.is_zero());
        CHECK(p.re < 0.0);
    }

    // phi(b) = 0 by the anchoring; the hard-edge counterpart must vanish
    // independently (real part; the imaginary part carries the 2 pi lattice).
    CHECK(dbl(abs(m.phi(Complex(m.b), kCtx).re)) < 1e-9);
    CHECK(dbl(abs(m.phi(Complex(0.0, 0.0), kCtx).re)) < 1e-8);
}

TEST_CASE("g functions: normalization, boundary values, decay") {
    const EquilibriumMeasure& m = measure_m1();

    // g(z)/log(z) -> 1 as z -> +infinity (total mass 1).
    Complex gfar = m.g(Complex(1e8, 0.0), kCtx);
    CHECK(dbl(abs(gfar / Complex(log(Real(1e8))) - 1.0)) < 1e-6);

    // Im g_+(x) = pi mu([x, b]): compare the boundary shortcut against the
    // complex path just above the cut.
    Real x = m.b * Real(0.4);
    Complex gup = m.g(Complex(x, Real(0.0)), kCtx);
    Complex gnear = m.g(Complex(x, Real(1e-9)), kCtx);
    CHECK(dbl(abs(gup.im - gnear.im)) < 1e-7);
    CHECK(dbl(abs(gup.re - gnear.re)) < 1e-7);
    CHECK(dbl(abs(gup.im - const_pi() * m.mass_tail(x, kCtx))) < 1e-12);

    // g_tilde'(z) ~ z^(-1/2) for large real z.
    Real z0(400.0);
    Real h(1e-6);
    Real fd = (m.g_tilde(Complex(z0 + h), kCtx).re - m.g_tilde(Complex(z0 - h), kCtx).re) / (2 * h);
    CHECK(dbl(abs(fd * sqrt(z0) - 1)) < 1e-4);

    CHECK_THROWS_AS(m.g_tilde(Complex(-30.0, 0.1), kCtx), BranchCut);
}

TEST_CASE("local conformal maps at the edges") {
    const EquilibriumMeasure& m = measure_m1();

    CHECK(dbl(abs(m.f_b(Complex(m.b), kCtx))) == 0.0);

    // Finite differences against the closed-form edge derivatives.
    Real h = m.b * Real(1e-7);
    Real fbp = ((m.f_b(Complex(m.b + h), kCtx) - m.f_b(Complex(m.b - h), kCtx)) / (2 * h)).re;
    CHECK(dbl(abs(fbp / m.f_b_deriv_edge() - 1)) < 1e-4);

    Real f0p = ((m.f_0(Complex(h), kCtx) - m.f_0(Complex(-h, 0.0), kCtx)) / (2 * h)).re;
    CHECK(dbl(abs(f0p / m.f_0_deriv_edge() - 1)) < 1e-4);

    // Analyticity across the cut: compare upper-limit and complex values.
    Complex w1 = m.f_b(Complex(m.b * Real(0.9)), kCtx);
    Complex w2 = m.f_b(Complex(m.b * Real(0.9), m.b * Real(1e-10)), kCtx);
    CHECK(dbl(abs(w1 - w2)) < 1e-7);

    Complex v1 = m.f_0(Complex(m.b * Real(0.05)), kCtx);
    Complex v2 = m.f_0(Complex(m.b * Real(0.05), m.b * Real(1e-10)), kCtx);
    CHECK(dbl(abs(v1 - v2)) < 1e-7);

    CHECK_THROWS_AS(m.f_b(Complex(0.0, 0.0), kCtx), OutsideRadius);
    CHECK_THROWS_AS(m.f_0(Complex(m.b), kCtx), OutsideRadius);
}

TEST_CASE("small-M limits: edge constants and the semicircle-type law") {
    PrecisionContext ctx = kCtx;
    EquilibriumMeasure m = build_measure(Potential::linear(Real(1e-3)), 96, ctx);
    Real M(1e-3);
    Real pi = const_pi();
    CHECK(dbl(abs(m.psi0 * sqrt(M) * pi - 1)) < 5e-3);
    CHECK(dbl(abs(m.psib * 4 * pi * M * sqrt(M) - 1)) < 5e-3);

    // psi(x) ~ (1/(2 pi M)) sqrt((4M - x)/x) inside the bulk.
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        Real x = 4 * M * t;
        Real mp = sqrt((4 * M - x) / x) / (2 * pi * M);
        CHECK(dbl(abs(m.psi(x) / mp - 1)) < 5e-3);
    }
}

TEST_CASE("large-M limits and DMPK density") {
    PrecisionContext ctx = kCtx;
    EquilibriumMeasure m = build_measure(Potential::linear(Real(100.0)), 96, ctx);
    Real M(100.0);
    for (double t : {0.1, 0.5, 0.9}) {
        Real x = M * M * t;
        CHECK(dbl(abs(2 * M * sqrt(x) * m.psi(x) - 1)) < 0.05);
    }

    // rho(x; M) = 2 x psi(x^2), definitional.
    Real xr = sqrt(m.b) * Real(0.5);
    CHECK(dbl(abs(dmpk_density(m, xr) / (2 * xr) - m.psi(xr * xr))) == 0.0);

    // Ohm trend: M * ohm_integral approaches 1 from one side as M grows.
    EquilibriumMeasure m10 = build_measure(Potential::linear(Real(10.0)), 96, ctx);
    Real o10 = Real(10.0) * ohm_integral(m10, ctx);
    Real o100 = M * ohm_integral(m, ctx);
    CHECK(dbl(abs(o100 - 1)) < dbl(abs(o10 - 1)));
    CHECK(dbl(abs(o100 - 1)) < 0.1);
}

TEST_CASE("general polynomial potential end-to-end") {
    // V = x + x^2/10.
    Potential V = Potential::poly({Real(1.0), Real(0.1)});
    PrecisionContext ctx = kCtx;
    EquilibriumMeasure m = build_measure(V, 64, ctx);
    Real mass = m.integrate_mu([](const Real&) { return Real(1.0); }, ctx);
    CHECK(dbl(abs(mass - 1)) < 1e-8);
    for (double t : {0.25, 0.5, 0.75}) {
        Real x = m.b * t;
        Real res = m.g_log_abs(x, ctx) + m.g_tilde_log_abs(x, ctx) - m.pot(x) - m.ell;
        CHECK(dbl(abs(res)) < 1e-7);
    }
    CHECK(m.phi(Complex(m.b * 2), ctx).re < 0.0);
}
