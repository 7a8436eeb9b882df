#include "sinhlab/conformal.hpp"

#include "sinhlab/specialfn.hpp"

#include <algorithm>
#include <cmath>

namespace sinhlab {

Real s2_of(const Real& x) {
    if (!(x > 0.0)) throw DomainError("s2_of: requires x > 0");
    return 1 + 2 / x;
}

Real b_of(const Real& x) {
    if (!(x > 0.0)) throw DomainError("b_of: requires x > 0");
    PrecisionGuard guard(x.precision());
    Real xp1 = x + 1;
    Real r = sqrt(xp1 * xp1 - 1) + acosh(xp1);
    return r * r / 4;
}

Real s1_of(const Real& x, const PrecisionContext& ctx) {
    if (!(x > 0.0)) throw DomainError("s1_of: requires x > 0");
    PrecisionGuard guard(ctx.mantissa_bits);
    Real xx = x.rounded_to(ctx.mantissa_bits);
    // Solve x sqrt(t) = arccos((t-1)/(t+1)) for t = -s in (0, inf).
    auto fn = [&](const Real& t) { return xx * sqrt(t) - acos((t - 1) / (t + 1)); };
    // fn < 0 at small t (right side -> pi), > 0 at large t.
    Real lo(1e-8), hi(4.0);
    Real guess_large = const_pi() * const_pi() / (xx * xx);  // large-x regime
    Real guess_small = 2 / xx;                               // small-x regime
    lo = min(lo, min(guess_large, guess_small) / 16);
    hi = max(hi, 16 * max(guess_large, guess_small));
    while (fn(lo) > 0.0) lo /= 16;
    while (fn(hi) < 0.0) hi *= 16;
    Real t = find_root_bisect(fn, lo, hi, ctx);
    return -t;
}

// ---------------------------------------------------------------------------
// J and scriptJ with the upper-limit convention on the real axis.

namespace {

bool on_real_axis(const Complex& s) { return s.im.is_zero(); }

}  // namespace

Complex J_of(const Real& x, const Complex& s) {
    mpfr_prec_t prec = std::max(x.precision(), s.precision());
    PrecisionGuard guard(prec + 16);
    Real xx = x.rounded_to(prec + 16);
    if (on_real_axis(s)) {
        Real sr = s.re;
        if (sr >= 0.0 && sr <= 1.0) {
            if (sr.is_zero()) {
                // Upper limit at the origin: J = -i pi.
                return rounded_to(Complex(Real(0.0), -const_pi()), prec);
            }
            throw UndefinedOnCut("J_of: undefined on (0, 1]");
        }
        if (sr > 1.0) {
            Real w = (sr + 1) / (sr - 1);
            return rounded_to(Complex(xx * sqrt(sr) + acosh(w), Real(0.0)), prec);
        }
        // s < 0: upper limit J = i (x sqrt(|s|) - arccos((|s|-1)/(|s|+1))).
        Real t = -sr;
        Real val = xx * sqrt(t) - acos((t - 1) / (t + 1));
        return rounded_to(Complex(Real(0.0), val), prec);
    }
    Complex sc = rounded_to(s, prec + 16);
    Complex w = (sc + 1.0) / (sc - 1.0);
    return rounded_to(xx * sqrt(sc) + arcosh_principal(w), prec);
}

Complex scriptJ_of(const Real& x, const Complex& s) {
    Complex j = J_of(x, s);
    return j * j / 4.0;
}

Complex J_deriv(const Real& x, const Complex& s) {
    mpfr_prec_t prec = std::max(x.precision(), s.precision());
    PrecisionGuard guard(prec + 16);
    Complex sc = rounded_to(s, prec + 16);
    Complex rs;
    if (on_real_axis(s) && s.re < 0.0) {
        rs = Complex(Real(0.0), sqrt(-s.re));  // upper limit of sqrt
    } else {
        rs = sqrt(sc);
    }
    Complex d = x.rounded_to(prec + 16) / (2.0 * rs) - 1.0 / (rs * (sc - 1.0));
    return rounded_to(d, prec);
}

Complex scriptJ_deriv(const Real& x, const Complex& s) {
    return J_of(x, s) * J_deriv(x, s) / 2.0;
}

// ---------------------------------------------------------------------------
// Curve construction.

namespace {

// g(v) = x sin(v)/v + cos(v) on (-pi, 0); g(0) := x + 1.
Real curve_g(const Real& x, const Real& v) {
    if (v.is_zero()) return x + 1;
    return x * sin(v) / v + cos(v);
}

Real curve_g_deriv(const Real& x, const Real& v) {
    return x * (v * cos(v) - sin(v)) / (v * v) - sin(v);
}

struct CurvePoint {
    Complex s;
    Complex w;  // u + iv
    Real u, v;
};

CurvePoint curve_point(const Real& x, const Real& vstar, const Real& tau) {
    CurvePoint p;
    p.v = vstar * (1 - tau * tau);
    Real g = curve_g(x, p.v);
    if (g < 1.0) g = Real(1.0);  // clip roundoff below the branch point
    p.u = acosh(g);
    p.w = Complex(p.u, p.v);
    Complex cw = cosh(p.w);
    p.s = (cw + 1.0) / (cw - 1.0);
    return p;
}

}  // namespace

Complex SpectralCurve::point(const Real& tau) const {
    PrecisionGuard guard(precision);
    return curve_point(x, vstar, tau).s;
}

Complex SpectralCurve::velocity(const Real& tau) const {
    PrecisionGuard guard(precision);
    CurvePoint p = curve_point(x, vstar, tau);
    Real dv = -2 * vstar * tau;
    Real dudtau;
    if (tau < 1e-8) {
        // u ~ sqrt(2 g'(vstar) (v - vstar)) with v - vstar = -vstar tau^2.
        dudtau = sqrt(2 * curve_g_deriv(x, vstar) * (-vstar));
    } else {
        Real g = curve_g(x, p.v);
        Real gp = curve_g_deriv(x, p.v);
        Real denom = sqrt(g - 1) * sqrt(g + 1);
        dudtau = gp / denom * dv;
    }
    Complex dw(dudtau, dv);
    Complex cw = cosh(p.w);
    Complex num = -2.0 * sinh(p.w);
    Complex den = (cw - 1.0) * (cw - 1.0);
    return num / den * dw;
}

Real SpectralCurve::J_on_curve(const Real& tau) const {
    PrecisionGuard guard(precision);
    // On the curve (s+1)/(s-1) = cosh(w) with w in the principal strip, so
    // J = x coth(w/2) + w and its imaginary part vanishes identically:
    // J = x Re(coth(w/2)) + u.
    CurvePoint p = curve_point(x, vstar, tau);
    Complex half = p.w / 2.0;
    Complex ch = cosh(half), sh = sinh(half);
    Complex cth = ch / sh;
    return x * cth.re + p.u;
}

Real SpectralCurve::J_on_curve_deriv(const Real& tau) const {
    PrecisionGuard guard(precision);
    CurvePoint p = curve_point(x, vstar, tau);
    Real dv = -2 * vstar * tau;
    Real dudtau;
    if (tau < 1e-8) {
        dudtau = sqrt(2 * curve_g_deriv(x, vstar) * (-vstar));
    } else {
        Real g = curve_g(x, p.v);
        Real gp = curve_g_deriv(x, p.v);
        dudtau = gp / (sqrt(g - 1) * sqrt(g + 1)) * dv;
    }
    Complex cw = cosh(p.w);
    Complex factor = -(x + 1.0 - cw) / (cw - 1.0);
    Complex d = factor * Complex(dudtau, dv);
    return d.re;
}

SpectralCurve build_curve(const Real& x, int n_nodes, const PrecisionContext& ctx) {
    if (!(x > 0.0)) throw DomainError("build_curve: requires x > 0");
    PrecisionGuard guard(ctx.mantissa_bits);
    SpectralCurve c;
    c.precision = ctx.mantissa_bits;
    c.x = x.rounded_to(ctx.mantissa_bits);
    c.s2 = s2_of(c.x);
    // The curve parametrization takes the square root of g(v) - 1, which
    // doubles the relative error of vstar; both curve-defining roots are
    // therefore solved down to the arithmetic floor, not to ctx tolerances.
    PrecisionContext tight = PrecisionContext::near_arithmetic(ctx.mantissa_bits);
    c.s1 = s1_of(c.x, tight);
    c.b = b_of(c.x);

    // vstar solves x sin(v)/v + cos(v) = 1 on (-pi, 0).
    Real pi = const_pi();
    auto gfn = [&](const Real& v) { return curve_g(c.x, v) - 1; };
    c.vstar = find_root_bisect(gfn, -pi * (1 - Real(1e-12)), -Real(1e-12) * pi, tight);

    c.e1 = 4 * sqrt(-c.s1) * (1 - c.s1) / (c.x * (c.s2 - c.s1));
    c.d1 = 2 * sqrt(Real(2)) * pow(c.s2, Real(0.25)) / (c.x * pow(c.b, Real(0.25)));

    auto spoint = [&](const Real& tau) { return curve_point(c.x, c.vstar, tau).s; };
    auto svel = [&](const Real& tau) { return c.velocity(tau); };
    int panels = std::max(8, n_nodes / 64);
    c.gamma1 = ContourSamples::from_parametrization(spoint, svel, Real(0.0), Real(1.0), panels, 32,
                                                    false);
    c.gamma2 = c.gamma1;
    for (auto& n : c.gamma2.nodes) n = conj(n);
    for (auto& w : c.gamma2.weights) w = conj(w);
    for (auto& n : c.gamma2.coarse_nodes) n = conj(n);
    for (auto& w : c.gamma2.coarse_weights) w = conj(w);

    int table_n = std::max(n_nodes, 128);
    c.table_tau.reserve(table_n + 1);
    c.table_s.reserve(table_n + 1);
    c.table_J.reserve(table_n + 1);
    for (int j = 0; j <= table_n; ++j) {
        Real tau = Real(j) / Real(table_n);
        c.table_tau.push_back(tau);
        c.table_s.push_back(spoint(tau));
        c.table_J.push_back(c.J_on_curve(tau));
    }
    return c;
}

bool SpectralCurve::encloses(const Complex& s) const {
    // The squared map sends the exterior of the curve in C_+ onto C_+ and the
    // upper interior onto C_-, so one evaluation decides membership exactly.
    if (s.im.is_zero()) return s.re > s1 && s.re < s2;
    PrecisionGuard guard(precision);
    Complex img = scriptJ_of(x, s);
    return s.im.sign() > 0 ? img.im.sign() < 0 : img.im.sign() > 0;
}

// ---------------------------------------------------------------------------
// Boundary values via the monotone J table.

BoundaryPair boundary_values(const SpectralCurve& curve, const Real& y,
                             const PrecisionContext& ctx) {
    if (!(y > 0.0 && y < curve.b)) throw DomainError("boundary_values: y must lie in (0, b)");
    PrecisionGuard guard(ctx.mantissa_bits);
    Real target = 2 * sqrt(y);
    // Bracket from the dense table; J is strictly increasing along gamma1.
    size_t lo = 0, hi = curve.table_J.size() - 1;
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (curve.table_J[mid] < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Real tlo = curve.table_tau[lo], thi = curve.table_tau[hi];
    auto fn = [&](const Real& t) { return curve.J_on_curve(t) - target; };
    auto fp = [&](const Real& t) { return curve.J_on_curve_deriv(t); };
    Real seed = (tlo + thi) / 2;
    Real tau = find_root_newton(fn, fp, seed, ctx, &tlo, &thi);
    Complex plus = curve.point(tau);
    return BoundaryPair{plus, conj(plus)};
}

// ---------------------------------------------------------------------------
// Inversion.

namespace {

// Newton on scriptJ(s) = z. Seeds must be on the intended sheet; membership
// is the caller's job.
bool newton_scriptJ(const SpectralCurve& curve, const Complex& z, Complex s,
                    const PrecisionContext& ctx, Complex& out) {
    Real tol = max(ctx.abs_tol, ctx.rel_tol * max(Real(1.0), abs(z)));
    for (int it = 0; it < 60; ++it) {
        // Keep iterates off the segment [0, 1] where the map is undefined.
        if (abs(s.im) < 1e-40 && s.re > -0.05 && s.re < 1.05) {
            if (s.im.is_zero()) s.im = Real(1e-30);
        }
        Complex jv, dv;
        try {
            jv = scriptJ_of(curve.x, s);
            dv = scriptJ_deriv(curve.x, s);
        } catch (const Error&) {
            return false;
        }
        Complex r = jv - z;
        if (abs(r) <= tol) {
            out = s;
            return true;
        }
        if (abs(dv) == 0.0) return false;
        Complex step = r / dv;
        // Damp very large steps.
        Real cap = 0.5 * (curve.s2 - curve.s1);
        Real as = abs(step);
        if (as > cap && abs(s) < 4 * (curve.s2 - curve.s1)) step = step * (cap / as);
        s = s - step;
        if (!s.is_finite()) return false;
    }
    return false;
}

Complex far_seed(const SpectralCurve& curve, const Complex& z) {
    return 4.0 * z / (curve.x * curve.x) + Complex((curve.s1 + curve.s2) / 2);
}

}  // namespace

Complex invert_outer(const SpectralCurve& curve, const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.mantissa_bits);
    Complex zz = rounded_to(z, ctx.mantissa_bits);
    if (zz.im.is_zero() && zz.re >= 0.0 && zz.re <= curve.b) {
        throw DomainError("invert_outer: z on the cut [0, b]");
    }
    const Real& b = curve.b;
    auto accept = [&](const Complex& s, Complex& out) {
        if (curve.encloses(s)) return false;
        out = s;
        return true;
    };

    Complex s, result;
    // Direct seeds.
    std::vector<Complex> seeds;
    if (abs(zz) > 4 * b) seeds.push_back(far_seed(curve, zz));
    if (abs(zz - Complex(b)) < b * 0.5) seeds.push_back(curve.s2 + curve.d1 * sqrt(zz - b));
    if (abs(zz) < b * 0.5) seeds.push_back(curve.s1 - curve.e1 * sqrt(-zz));
    for (const auto& seed : seeds) {
        if (newton_scriptJ(curve, zz, seed, ctx, s) && accept(s, result)) return result;
    }

    // Radial homotopy from a far point; the ray never gets closer to [0, b]
    // than the target itself.
    Real r0 = 8 * b / abs(zz);
    Complex zfar = zz * max(r0, Real(2.0));
    if (!newton_scriptJ(curve, zz * max(r0, Real(2.0)), far_seed(curve, zfar), ctx, s)) {
        throw NonConvergence("invert_outer: far anchor failed");
    }
    int steps = 16;
    for (int attempt = 0; attempt < 3; ++attempt) {
        Complex cur = s;
        bool ok = true;
        Real lam = log(max(r0, Real(2.0)));
        for (int k = 1; k <= steps; ++k) {
            Complex zt = zz * exp(lam * (steps - k) / steps);
            if (!newton_scriptJ(curve, zt, cur, ctx, cur)) {
                ok = false;
                break;
            }
        }
        if (ok && accept(cur, result)) return result;
        if (ok) throw WrongSheet("invert_outer: converged to the inner sheet");
        steps *= 4;
    }
    throw NonConvergence("invert_outer: homotopy failed");
}

Complex invert_inner(const SpectralCurve& curve, const Complex& z, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.mantissa_bits);
    Complex zz = rounded_to(z, ctx.mantissa_bits);
    Real pi = const_pi();
    Real pi2_4 = pi * pi / 4;
    // Membership in P (right of the parabola through -pi^2/4).
    if (zz.re < zz.im * zz.im / (pi * pi) - pi2_4) {
        throw DomainError("invert_inner: z outside the image region");
    }
    if (zz.im.is_zero() && zz.re >= 0.0 && zz.re <= curve.b) {
        throw DomainError("invert_inner: z on the cut [0, b]");
    }

    if (zz.im.is_zero()) {
        Real zr = zz.re;
        if (zr < 0.0) {
            // scriptJ decreases from 0 to -pi^2/4 along (s1, 0).
            auto fn = [&](const Real& s) {
                Real t = -s;
                Real jim = curve.x * sqrt(t) - acos((t - 1) / (t + 1));
                return -jim * jim / 4 - zr;
            };
            Real lo = curve.s1 * (1 - Real(1e-24));
            Real hi = -Real(1e-30);
            Real s = find_root_bisect(fn, lo, hi, ctx);
            return Complex(s, Real(0.0));
        }
        // z > b: scriptJ decreases from +inf to b along (1, s2).
        auto fn = [&](const Real& s) {
            Real j = curve.x * sqrt(s) + acosh((s + 1) / (s - 1));
            return j * j / 4 - zr;
        };
        Real lo = 1 + (curve.s2 - 1) * Real(1e-24);
        Real hi = curve.s2 * (1 - Real(1e-28)) ;
        // fn(hi) ~ b - z < 0 < fn(lo).
        Real s = find_root_bisect(fn, lo, hi, ctx);
        return Complex(s, Real(0.0));
    }

    auto accept = [&](const Complex& s, Complex& out) {
        if (!curve.encloses(s)) return false;
        out = s;
        return true;
    };
    Complex s, result;
    // Edge seeds.
    std::vector<Complex> seeds;
    if (abs(zz - Complex(curve.b)) < curve.b * 0.5) {
        seeds.push_back(curve.s2 - curve.d1 * sqrt(zz - curve.b));
    }
    if (abs(zz) < curve.b * 0.5) seeds.push_back(curve.s1 + curve.e1 * sqrt(-zz));
    for (const auto& seed : seeds) {
        if (newton_scriptJ(curve, zz, seed, ctx, s) && accept(s, result)) return result;
    }

    // Straight-segment homotopy from a real anchor inside (s1, 0); P is
    // convex so the path stays inside. Every intermediate solution must stay
    // on the inner sheet, otherwise the attempt restarts with smaller steps.
    Complex sa(curve.s1 * Real(0.4), Real(0.0));
    Complex za = scriptJ_of(curve.x, sa);
    int steps = 24;
    for (int attempt = 0; attempt < 3; ++attempt) {
        Complex cur = sa;
        bool ok = true;
        for (int k = 1; k <= steps; ++k) {
            Complex zt = za + (zz - za) * Real(k) / Real(steps);
            if (k < steps && zt.im.is_zero()) zt.im = Real(1e-30) * (zz.im.sign() >= 0 ? 1 : -1);
            if (abs(zt) < curve.b * 0.1) {
                // Re-seed from the hard-edge expansion where the map has a
                // double point and Newton alone can hop sheets.
                cur = curve.s1 + curve.e1 * sqrt(-zt);
            }
            if (!newton_scriptJ(curve, zt, cur, ctx, cur) || !curve.encloses(cur)) {
                ok = false;
                break;
            }
        }
        if (ok && accept(cur, result)) return result;
        steps *= 4;
    }
    throw NonConvergence("invert_inner: homotopy failed");
}

// ---------------------------------------------------------------------------

Complex gamma_cauchy_integral(const SpectralCurve& curve, const ComplexFn& f,
                              const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.mantissa_bits);
    auto run = [&](const std::vector<Complex>& nodes, const std::vector<Complex>& weights) {
        Complex acc;
        for (size_t i = 0; i < nodes.size(); ++i) {
            // Positive orientation of the closed curve: along gamma2 from s1
            // to s2, back along gamma1.
            acc += conj(weights[i]) * f(conj(nodes[i])) - weights[i] * f(nodes[i]);
        }
        return acc;
    };
    Complex fine = run(curve.gamma1.nodes, curve.gamma1.weights);
    Complex coarse = run(curve.gamma1.coarse_nodes, curve.gamma1.coarse_weights);
    if (abs(fine - coarse) > ctx.tolerance_for(abs(fine) + ctx.abs_tol)) {
        throw NonConvergence("gamma_cauchy_integral: node doubling unstable");
    }
    Real two_pi = 2 * const_pi();
    return fine / Complex(Real(0.0), two_pi);
}

}  // namespace sinhlab
