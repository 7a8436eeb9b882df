#include "doctest.h"

#include "sinhlab/conformal.hpp"

#include <cmath>

using namespace sinhlab;

namespace {
const PrecisionContext kCtx = PrecisionContext::make();
double dbl(const Real& r) { return r.to_double(); }

struct Lcg {
    unsigned long long s = 0x6a09e667f3bcc909ull;
    double next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return double(s >> 11) * (1.0 / 9007199254740992.0);
    }
    double range(double lo, double hi) { return lo + (hi - lo) * next(); }
};
}  // namespace

TEST_CASE("s2, s1, b formulas and limits") {
    CHECK(dbl(s2_of(Real(2.0))) == 2.0);
    CHECK(dbl(s2_of(Real(1.0))) == 3.0);
    CHECK(dbl(s2_of(Real(1e6))) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(s2_of(Real(1e8)) > 1.0);
    CHECK_THROWS_AS(s2_of(Real(-1.0)), DomainError);

    // x = pi/2 -> s1 = -1 (arccos(0) = pi/2).
    Real s1 = s1_of(const_pi() / 2, kCtx);
    CHECK(dbl(abs(s1 + 1)) < 1e-13);

    // Large x: s1 ~ -(pi/x)^2; small x: s1 ~ -2/x.
    Real pi = const_pi();
    Real big = s1_of(Real(4000.0), kCtx);
    CHECK(dbl(abs(big * Real(4000.0) * Real(4000.0) / (pi * pi) + 1)) < 2e-3);
    Real small = s1_of(Real(1e-4), kCtx);
    CHECK(dbl(abs(small * Real(1e-4) / 2 + 1)) < 1e-3);

    // b(x) limits.
    CHECK(dbl(abs(b_of(Real(4000.0)) / Real(4000.0 * 4000.0 / 4) - 1)) < 6e-3);
    CHECK(dbl(abs(b_of(Real(1e-5)) / Real(2e-5) - 1)) < 1e-4);

    // scriptJ(s2) = b by definition.
    Real x(1.0);
    Complex sj = scriptJ_of(x, Complex(s2_of(x)));
    CHECK(dbl(abs(sj - Complex(b_of(x)))) < 1e-70);
}

TEST_CASE("J values, conventions, and derivative") {
    Real x(1.7);
    PrecisionContext ctx = kCtx;
    Real s1 = s1_of(x, ctx);

    // J(s1) = 0.
    CHECK(dbl(abs(J_of(x, Complex(s1)))) < 1e-13);

    // scriptJ(0 + i0) = -pi^2/4, via the upper-limit convention at 0.
    Real pi = const_pi();
    CHECK(dbl(abs(scriptJ_of(x, Complex(0.0, 0.0)) + Complex(pi * pi / 4))) < 1e-70);

    CHECK_THROWS_AS(J_of(x, Complex(0.5, 0.0)), UndefinedOnCut);

    // J(s) ~ x sqrt(s) at +infinity.
    Complex far(4e6, 0.0);
    CHECK(dbl(abs(J_of(x, far) / (x * sqrt(far)) - 1.0)) < 1e-2);

    // Conjugation symmetry off the axis.
    Lcg rng;
    for (int i = 0; i < 50; ++i) {
        Complex s(Real(rng.range(-4, 4)), Real(rng.range(0.05, 3)));
        CHECK(dbl(abs(J_of(x, conj(s)) - conj(J_of(x, s)))) < 1e-70);
    }

    // Analytic derivative against central differences.
    Complex s0(2.3, 0.9);
    Complex h(1e-30, 0.0);
    Complex fd = (J_of(x, s0 + h) - J_of(x, s0 - h)) / (2.0 * h);
    CHECK(dbl(abs(fd - J_deriv(x, s0))) < 1e-25);

    // On (1, infinity) J decreases to s2 then increases.
    Real s2 = s2_of(x);
    Real j_min = J_of(x, Complex(s2)).re;
    CHECK(J_of(x, Complex(1 + (s2 - 1) / 10)).re > j_min);
    CHECK(J_of(x, Complex(s2 + 3)).re > j_min);
}

TEST_CASE("curve endpoints, monotonicity, and realness") {
    PrecisionContext ctx = kCtx;
    for (double xv : {0.3, 1.0, 2.0, 7.0}) {
        Real x(xv);
        SpectralCurve c = build_curve(x, 512, ctx);
        CHECK(dbl(abs(c.point(Real(0.0)) - Complex(c.s1))) < 1e-11);
        CHECK(dbl(abs(c.point(Real(1.0)) - Complex(c.s2))) < 1e-60);

        // J real and strictly increasing along the nodes; interior strictly
        // in the upper half plane.
        Real prev(-1.0);
        for (size_t j = 0; j < c.table_tau.size(); ++j) {
            Real jv(0.0);
            Complex full = (j == 0 || j + 1 == c.table_tau.size())
                               ? Complex(c.table_J[j])
                               : J_of(x, c.table_s[j]);
            CHECK(dbl(abs(full.im)) < 1e-10);
            jv = c.table_J[j];
            CHECK(dbl(abs(full.re - jv)) < 1e-10);
            CHECK(jv > prev);
            prev = jv;
            if (j > 0 && j + 1 < c.table_tau.size()) CHECK(c.table_s[j].im > 0.0);
        }
        CHECK(dbl(abs(c.table_J.back() - 2 * sqrt(c.b))) < 1e-12);
    }
}

TEST_CASE("membership test") {
    SpectralCurve c = build_curve(Real(2.0), 512, kCtx);
    CHECK(c.encloses(Complex(1.0, 0.0)));
    CHECK(c.encloses(Complex(0.5, 0.0)));
    CHECK(c.encloses(Complex(c.s1 / 2, 0.0)));
    CHECK(!c.encloses(Complex(c.s2 + 0.5, 0.0)));
    CHECK(!c.encloses(Complex(c.s1 - 0.5, 0.0)));
    CHECK(!c.encloses(Complex(1.0, 3.0)));
    CHECK(!c.encloses(Complex(1.0, -3.0)));
}

TEST_CASE("round trips through the inverse maps") {
    PrecisionContext ctx = kCtx;
    SpectralCurve c = build_curve(Real(1.3), 512, ctx);
    Real b = c.b;

    // Outer: 10x10 grid avoiding [0, b] by b/100.
    int bad = 0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            Complex z(Real(-1.5 * dbl(b) + 4.0 * dbl(b) * i / 9.0),
                      Real(-2.0 * dbl(b) + 4.0 * dbl(b) * j / 9.0));
            if (z.im.is_zero()) z.im = Real(0.011) * b;
            // Skip points hugging the cut.
            if (abs(z.im) < b / 100 && z.re > -b / 100 && z.re < b * 1.01) continue;
            Complex s = invert_outer(c, z, ctx);
            CHECK(!c.encloses(s));
            Real err = abs(scriptJ_of(c.x, s) - z);
            if (!(err <= Real(1e-12) * max(Real(1.0), abs(z)))) ++bad;
        }
    }
    CHECK(bad == 0);

    // Conjugate symmetry.
    Complex zs(0.7 * dbl(b), 0.9 * dbl(b));
    Complex a1 = invert_outer(c, zs, ctx);
    Complex a2 = invert_outer(c, conj(zs), ctx);
    CHECK(dbl(abs(a2 - conj(a1))) < 1e-12);

    // Outer large-z normalization: invert_outer(R) x^2/(4R) -> 1.
    for (double R : {50.0, 500.0, 5000.0}) {
        Complex s = invert_outer(c, Complex(R * dbl(b), 0.0), ctx);
        CHECK(dbl(abs(s * c.x * c.x / (4.0 * Real(R) * b) - 1.0)) < 0.6 / R);
    }

    // Inner: P-points right of the parabola.
    Lcg rng;
    int checked = 0;
    for (int i = 0; checked < 25 && i < 200; ++i) {
        Complex z(Real(rng.range(-1.5, 3.0) * dbl(b)), Real(rng.range(-2.5, 2.5) * dbl(b)));
        Real pi = const_pi();
        if (z.re < z.im * z.im / (pi * pi) - pi * pi / 4 + 0.3) continue;
        if (abs(z.im) < b / 50 && z.re > -b / 50 && z.re < b * 1.02) continue;
        Complex s = invert_inner(c, z, ctx);
        CHECK(c.encloses(s));
        Real err = abs(scriptJ_of(c.x, s) - z);
        CHECK(err <= Real(1e-12) * max(Real(1.0), abs(z)));
        ++checked;
    }
    CHECK(checked == 25);

    // Inner near b: (s2 - result)/sqrt(b - z) -> d1 phase from the edge
    // expansion s = s2 - d1 sqrt(z - b).
    Real dz(1e-8);
    Complex zb = Complex(b - dz, Real(0.0)) + Complex(0.0, 1e-12);
    Complex s = invert_inner(c, zb, ctx);
    Complex ratio = (Complex(c.s2) - s) / sqrt(Complex(b) - zb);
    // sqrt(z - b) = i sqrt(b - z) on the upper side.
    Complex expected = c.d1 * Complex(0.0, 1.0);
    CHECK(dbl(abs(ratio - expected)) < 1e-3 * dbl(c.d1));

    // Real z in (-pi^2/4, 0) and z > b branches.
    Real pi = const_pi();
    Complex zneg(-dbl(pi * pi) / 8, 0.0);
    Complex sneg = invert_inner(c, zneg, ctx);
    CHECK(sneg.im.is_zero());
    CHECK(sneg.re > c.s1);
    CHECK(sneg.re < 0.0);
    CHECK(dbl(abs(scriptJ_of(c.x, sneg) - zneg)) < 1e-13);

    Complex zbig(3.0 * dbl(b), 0.0);
    Complex sbig = invert_inner(c, zbig, ctx);
    CHECK(sbig.re > 1.0);
    CHECK(sbig.re < c.s2);
    CHECK(dbl(abs(scriptJ_of(c.x, sbig) - zbig) / dbl(b)) < 1e-12);
}

TEST_CASE("boundary values") {
    PrecisionContext ctx = kCtx;
    SpectralCurve c = build_curve(Real(0.8), 512, ctx);
    Real b = c.b;

    // Limits at the edges.
    BoundaryPair p0 = boundary_values(c, b * Real(1e-10), ctx);
    CHECK(dbl(abs(p0.plus - Complex(c.s1))) < 1e-4);
    BoundaryPair pb = boundary_values(c, b * (1 - Real(1e-10)), ctx);
    CHECK(dbl(abs(pb.plus - Complex(c.s2))) < 1e-4);

    // Interior: scriptJ(I_plus(y)) = y and conjugation.
    for (double t : {0.1, 0.35, 0.6, 0.9}) {
        Real y = b * t;
        BoundaryPair bp = boundary_values(c, y, ctx);
        CHECK(dbl(abs(scriptJ_of(c.x, bp.plus) - Complex(y))) < 1e-12 * dbl(max(Real(1.0), y)));
        CHECK(bp.plus.im > 0.0);
        CHECK(dbl(abs(bp.minus - conj(bp.plus)))  == 0.0);
    }

    CHECK_THROWS_AS(boundary_values(c, -b, ctx), DomainError);
    CHECK_THROWS_AS(boundary_values(c, b * 2, ctx), DomainError);

    // Large-x regime: I_plus(y) x^2/4 ~ y + i pi sqrt(y) at x = 100, y = x^2/8.
    PrecisionContext cx = kCtx;
    SpectralCurve big = build_curve(Real(100.0), 512, cx);
    Real y = Real(100.0 * 100.0 / 8);
    BoundaryPair bp = boundary_values(big, y, cx);
    Complex lhs = bp.plus * Real(100.0 * 100.0) / 4;
    Complex rhs(y, const_pi() * sqrt(y));
    CHECK(dbl(abs(lhs - rhs) / abs(rhs)) < 0.05);
}

TEST_CASE("edge constants match finite-difference slopes") {
    PrecisionContext ctx = kCtx;
    SpectralCurve c = build_curve(Real(2.4), 512, ctx);
    // I_plus(y) ~ s1 + e1 sqrt(y) i near 0: slope of Im against sqrt(y).
    Real y1 = c.b * Real(1e-10), y2 = c.b * Real(4e-10);
    BoundaryPair q1 = boundary_values(c, y1, ctx);
    BoundaryPair q2 = boundary_values(c, y2, ctx);
    Real slope0 = (q2.plus.im - q1.plus.im) / (sqrt(y2) - sqrt(y1));
    CHECK(dbl(abs(slope0 - c.e1) / dbl(c.e1)) < 0.01);

    // I_plus(y) ~ s2 + d1 sqrt(b - y) i near b.
    Real w1 = c.b * (1 - Real(1e-10)), w2 = c.b * (1 - Real(4e-10));
    BoundaryPair r1 = boundary_values(c, w1, ctx);
    BoundaryPair r2 = boundary_values(c, w2, ctx);
    Real slopeb = (r2.plus.im - r1.plus.im) / (sqrt(c.b - w2) - sqrt(c.b - w1));
    CHECK(dbl(abs(slopeb - c.d1) / dbl(c.d1)) < 0.01);
}

TEST_CASE("gamma contour integral") {
    PrecisionContext ctx = kCtx;
    SpectralCurve c = build_curve(Real(1.0), 512, ctx);
    // Cauchy: (1/2pi i) closed-int 1/(xi - s) = 1 inside, 0 outside.
    Complex inside(0.4, 0.0);
    auto f_in = [&](const Complex& xi) { return 1.0 / (xi - inside); };
    CHECK(dbl(abs(gamma_cauchy_integral(c, f_in, ctx) - Complex(1.0))) < 1e-12);

    Complex outside(c.s2 + 2.0, 0.7);
    auto f_out = [&](const Complex& xi) { return 1.0 / (xi - outside); };
    CHECK(dbl(abs(gamma_cauchy_integral(c, f_out, ctx))) < 1e-12);
}
