#include "sinhlab/equilibrium.hpp"

#include "sinhlab/specialfn.hpp"

#include <algorithm>
#include <cmath>

namespace sinhlab {

// ---------------------------------------------------------------------------
// Potential.

Potential Potential::linear(const Real& M) {
    if (!(M > 0.0)) throw DomainError("Potential::linear: requires M > 0");
    Potential p;
    p.kind_ = Kind::linear;
    p.M_ = M;
    return p;
}

Potential Potential::poly(const std::vector<Real>& coeffs) {
    if (coeffs.empty()) throw DomainError("Potential::poly: no coefficients");
    Potential p;
    p.kind_ = Kind::poly;
    p.coeffs_ = coeffs;
    return p;
}

Real Potential::operator()(const Real& x) const {
    if (kind_ == Kind::linear) return x / M_;
    Real acc(0.0, x.precision());
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc * x;
}

Complex Potential::operator()(const Complex& z) const {
    if (kind_ == Kind::linear) return z / M_;
    Complex acc;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
    return acc * z;
}

Real Potential::deriv(const Real& x) const {
    if (kind_ == Kind::linear) return 1 / M_;
    Real acc(0.0, x.precision());
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + Real(double(k + 1)) * coeffs_[k];
    return acc;
}

Complex Potential::deriv(const Complex& z) const {
    if (kind_ == Kind::linear) return Complex(1 / M_);
    Complex acc;
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + Real(double(k + 1)) * coeffs_[k];
    return acc;
}

Real Potential::deriv2(const Real& x) const {
    if (kind_ == Kind::linear) return Real(0.0, x.precision());
    Real acc(0.0, x.precision());
    for (size_t k = coeffs_.size(); k-- > 1;) {
        acc = acc * x + Real(double((k + 1) * k)) * coeffs_[k];
    }
    return acc;
}

Real Potential::U(const Real& x) const { return deriv(x) * sqrt(x); }

Real Potential::U_deriv(const Real& u) const {
    Real su = sqrt(u);
    return deriv2(u) * su + deriv(u) / (2 * su);
}

EdgeBehavior Potential::u_deriv_edge_at_zero() const {
    Real vp0 = kind_ == Kind::linear ? 1 / M_ : coeffs_[0];
    return vp0.is_zero() ? EdgeBehavior::sqrt : EdgeBehavior::inverse_sqrt;
}

void Potential::validate(const PrecisionContext& ctx) const {
    PrecisionGuard guard(ctx.mantissa_bits);
    // Growth: V(x)/(sqrt(x)+1) must increase through 1e2, 1e3, 1e4.
    Real prev(-1e300);
    for (double xv : {1e2, 1e3, 1e4}) {
        Real ratio = (*this)(Real(xv)) / (sqrt(Real(xv)) + 1);
        if (!(ratio > prev)) throw DomainError("Potential: growth condition fails");
        prev = ratio;
    }
    // One-cut condition U' > 0 on a log grid.
    for (int e = -12; e <= 16; ++e) {
        Real x = pow(Real(10.0), Real(e) / 4);
        if (!(U_deriv(x) > 0.0)) throw DomainError("Potential: U' <= 0, not one-cut admissible");
    }
}

// ---------------------------------------------------------------------------
// Parameter equation.

Real F_of(const SpectralCurve& curve, const Potential& V, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.mantissa_bits);
    const Real& x = curve.x;
    auto f = [&](const Complex& xi) {
        Complex num = J_of(x, xi) * V.deriv(scriptJ_of(x, xi));
        return num / (sqrt(xi) * (xi - 1.0));
    };
    Complex val = gamma_cauchy_integral(curve, f, ctx);
    if (abs(val.im) > 1e4 * ctx.abs_tol * max(Real(1.0), abs(val.re))) {
        throw AnalyticityViolation("F_of: imaginary residue " + val.im.to_string(6));
    }
    return val.re;
}

Real F_of(const Real& x, const Potential& V, const PrecisionContext& ctx) {
    SpectralCurve curve = build_curve(x, 256, ctx);
    return F_of(curve, V, ctx);
}

Real solve_c(const Potential& V, const PrecisionContext& ctx) {
    V.validate(ctx);
    PrecisionGuard guard(ctx.mantissa_bits);
    auto f = [&](const Real& x) { return F_of(x, V, ctx) - 2; };
    Real lo(1.0), hi(1.0);
    Real flo = f(lo), fhi = flo;
    int tries = 0;
    while (flo > 0.0) {
        lo /= 2;
        flo = f(lo);
        if (++tries > 60) throw BracketFailure("solve_c: no lower bracket");
    }
    tries = 0;
    while (fhi < 0.0) {
        hi *= 2;
        fhi = f(hi);
        if (++tries > 60) throw BracketFailure("solve_c: no upper bracket");
    }
    if (lo == hi) return lo;
    return find_root_bisect(f, lo, hi, ctx);
}

// ---------------------------------------------------------------------------
// Density.

Real F_kernel(const SpectralCurve& curve, const Real& u, const Real& xi,
              const PrecisionContext& ctx) {
    if (u == xi) throw CoincidentPoints("F_kernel: u == xi");
    PrecisionGuard guard(ctx.mantissa_bits);
    Complex su = sqrt(boundary_values(curve, u, ctx).plus);
    Complex sx = sqrt(boundary_values(curve, xi, ctx).plus);
    Complex smu = conj(su);
    Complex num = (su + sx) * (smu - sx);
    Complex den = (su - sx) * (smu + sx);
    return log(abs(num / den));
}

Real density_psi(const SpectralCurve& curve, const Potential& V, const Real& x,
                 const PrecisionContext& ctx) {
    if (!(x > 0.0 && x < curve.b)) throw DomainError("density_psi: x outside (0, b)");
    PrecisionGuard guard(ctx.mantissa_bits);
    Complex sx = sqrt(boundary_values(curve, x, ctx).plus);
    auto integrand = [&](const Real& u) {
        Complex su = sqrt(boundary_values(curve, u, ctx).plus);
        Complex smu = conj(su);
        Real F = log(abs(((su + sx) * (smu - sx)) / ((su - sx) * (smu + sx))));
        return V.U_deriv(u) * F;
    };
    Real val = integrate_log_singular(integrand, x, Real(0.0), curve.b, ctx,
                                      V.u_deriv_edge_at_zero(), EdgeBehavior::sqrt);
    Real pi = const_pi();
    return val / (4 * pi * pi * sqrt(x));
}

// ---------------------------------------------------------------------------
// Measure construction.

namespace {

// psi by the route appropriate to the potential: the explicit boundary-value
// formula for linear fields, the U'F quadrature otherwise.
Real psi_route(const SpectralCurve& curve, const Potential& V, const Real& x,
               const PrecisionContext& ctx) {
    if (V.kind() == Potential::Kind::linear) {
        Complex ip = boundary_values(curve, x, ctx).plus;
        Real pi = const_pi();
        return sqrt(ip / Complex(x)).im / pi;
    }
    return density_psi(curve, V, x, ctx);
}

// Quadratic extrapolation to h = 0 through three (h, y) samples.
Real extrapolate3(const Real h[3], const Real y[3]) {
    Real acc(0.0);
    for (int i = 0; i < 3; ++i) {
        Real li(1.0);
        for (int j = 0; j < 3; ++j) {
            if (j != i) li *= (-h[j]) / (h[i] - h[j]);
        }
        acc += y[i] * li;
    }
    return acc;
}

}  // namespace

Real EquilibriumMeasure::x_of_theta(const Real& t) const {
    Real s = sin(t);
    return b * s * s;
}

Real EquilibriumMeasure::theta_of_x(const Real& x) const { return asin(sqrt(x / b)); }

Real EquilibriumMeasure::S_at(const Real& t) const {
    // Barycentric interpolation on the Chebyshev angular grid.
    Real num(0.0, precision), den(0.0, precision);
    for (size_t j = 0; j < theta.size(); ++j) {
        Real d = t - theta[j];
        if (d.is_zero()) return S[j];
        Real w = bary_w[j] / d;
        num += w * S[j];
        den += w;
    }
    return num / den;
}

Real EquilibriumMeasure::psi(const Real& x) const {
    if (!(x > 0.0 && x < b)) throw DomainError("EquilibriumMeasure::psi: x outside (0, b)");
    return S_at(theta_of_x(x)) / sqrt(x * (b - x));
}

std::vector<std::pair<Real, Real>> EquilibriumMeasure::psi_grid() const {
    std::vector<std::pair<Real, Real>> out;
    for (size_t j = 1; j + 1 < theta.size(); ++j) {
        Real x = x_of_theta(theta[j]);
        out.emplace_back(x, S[j] / sqrt(x * (b - x)));
    }
    return out;
}

Real EquilibriumMeasure::mass_tail(const Real& x, const PrecisionContext& ctx) const {
    if (x <= 0.0) return Real(1.0, precision);
    if (x >= b) return Real(0.0, precision);
    Real t0 = theta_of_x(x);
    Real pi2 = const_pi() / 2;
    auto f = [&](const Real& t) { return S_at(t); };
    return 2 * integrate_adaptive(f, t0, pi2, ctx).value;
}

Real EquilibriumMeasure::integrate_mu(const RealFn& f_of_x, const PrecisionContext& ctx) const {
    Real pi2 = const_pi() / 2;
    auto f = [&](const Real& t) { return f_of_x(x_of_theta(t)) * S_at(t); };
    return 2 * integrate_adaptive(f, Real(0.0), pi2, ctx).value;
}

Complex EquilibriumMeasure::g(const Complex& z, const PrecisionContext& ctx) const {
    PrecisionGuard guard(ctx.mantissa_bits);
    Real pi = const_pi();
    Real pi2 = pi / 2;
    if (z.im.is_zero()) {
        Real zr = z.re;
        if (zr > b) {
            auto f = [&](const Real& t) { return log(zr - x_of_theta(t)) * S_at(t); };
            return Complex(2 * integrate_adaptive(f, Real(0.0), pi2, ctx).value);
        }
        if (zr == b) {
            // b - x(theta) = b cos^2(theta) exactly.
            auto f = [&](const Real& t) { return (log(b) + 2 * log(cos(t))) * S_at(t); };
            Real v = 2 * integrate_adaptive(f, Real(0.0), pi2, ctx, EdgeBehavior::smooth,
                                            EdgeBehavior::inverse_sqrt)
                             .value;
            return Complex(v);
        }
        if (zr > 0.0) {
            return Complex(g_log_abs(zr, ctx), pi * mass_tail(zr, ctx));
        }
        if (zr.is_zero()) {
            // log x(theta) = log b + 2 log sin(theta).
            auto f = [&](const Real& t) { return (log(b) + 2 * log(sin(t))) * S_at(t); };
            Real v = 2 * integrate_adaptive(f, Real(0.0), pi2, ctx, EdgeBehavior::inverse_sqrt,
                                            EdgeBehavior::smooth)
                             .value;
            return Complex(v, pi);
        }
        // z < 0: upper limit of the logarithm.
        auto f = [&](const Real& t) { return log(x_of_theta(t) - zr) * S_at(t); };
        return Complex(2 * integrate_adaptive(f, Real(0.0), pi2, ctx).value, pi);
    }
    auto f = [&](const Real& t) { return log(Complex(z.re - x_of_theta(t), z.im)) * S_at(t); };
    ComplexQuadratureResult r = integrate_adaptive_complex(f, Real(0.0), pi2, ctx);
    return 2.0 * r.value;
}

Complex EquilibriumMeasure::g_tilde(const Complex& z, const PrecisionContext& ctx) const {
    PrecisionGuard guard(ctx.mantissa_bits);
    Real pi = const_pi();
    Real pi2 = pi / 2;
    // Domain: z must lie in the parabolic region P.
    if (z.re < z.im * z.im / (pi * pi) - pi * pi / 4) {
        throw BranchCut("g_tilde: z outside the parabolic region");
    }
    if (z.im.is_zero()) {
        Real zr = z.re;
        if (zr > b) {
            Real fz = map_f(zr);
            auto f = [&](const Real& t) {
                return log(fz - map_f(x_of_theta(t))) * S_at(t);
            };
            return Complex(2 * integrate_adaptive(f, Real(0.0), pi2, ctx).value);
        }
        if (zr == b) {
            Real fb = map_f(b);
            auto f = [&](const Real& t) { return log(fb - map_f(x_of_theta(t))) * S_at(t); };
            Real v = 2 * integrate_adaptive(f, Real(0.0), pi2, ctx, EdgeBehavior::smooth,
                                            EdgeBehavior::inverse_sqrt)
                             .value;
            return Complex(v);
        }
        if (zr > 0.0) {
            return Complex(g_tilde_log_abs(zr, ctx), pi * mass_tail(zr, ctx));
        }
        if (zr.is_zero()) {
            auto f = [&](const Real& t) { return log(map_f(x_of_theta(t))) * S_at(t); };
            Real v = 2 * integrate_adaptive(f, Real(0.0), pi2, ctx, EdgeBehavior::inverse_sqrt,
                                            EdgeBehavior::smooth)
                             .value;
            return Complex(v, pi);
        }
        // z in (-pi^2/4, 0): f(z) in (-1, 0), upper limit of the logarithm.
        Real fz = map_f(zr);
        auto f = [&](const Real& t) { return log(map_f(x_of_theta(t)) - fz) * S_at(t); };
        return Complex(2 * integrate_adaptive(f, Real(0.0), pi2, ctx).value, pi);
    }
    Complex fz = map_f(z);
    auto f = [&](const Real& t) { return log(fz - Complex(map_f(x_of_theta(t)))) * S_at(t); };
    ComplexQuadratureResult r = integrate_adaptive_complex(f, Real(0.0), pi2, ctx);
    return 2.0 * r.value;
}

Real EquilibriumMeasure::g_log_abs(const Real& x, const PrecisionContext& ctx) const {
    if (!(x > 0.0 && x < b)) throw DomainError("g_log_abs: x outside (0, b)");
    PrecisionGuard guard(ctx.mantissa_bits);
    Real t0 = theta_of_x(x);
    Real pi2 = const_pi() / 2;
    auto f = [&](const Real& t) { return log(abs(x - x_of_theta(t))) * S_at(t); };
    return 2 * integrate_log_singular(f, t0, Real(0.0), pi2, ctx);
}

Real EquilibriumMeasure::g_tilde_log_abs(const Real& x, const PrecisionContext& ctx) const {
    if (!(x > 0.0 && x < b)) throw DomainError("g_tilde_log_abs: x outside (0, b)");
    PrecisionGuard guard(ctx.mantissa_bits);
    Real t0 = theta_of_x(x);
    Real pi2 = const_pi() / 2;
    Real fx = map_f(x);
    auto f = [&](const Real& t) { return log(abs(fx - map_f(x_of_theta(t)))) * S_at(t); };
    return 2 * integrate_log_singular(f, t0, Real(0.0), pi2, ctx);
}

Complex EquilibriumMeasure::phi(const Complex& z, const PrecisionContext& ctx) const {
    return g(z, ctx) + g_tilde(z, ctx) - Complex(pot(z)) - Complex(ell);
}

Complex EquilibriumMeasure::phi_L(const Complex& z, const PrecisionContext& ctx) const {
    Real two_pi = 2 * const_pi();
    Complex p = phi(z, ctx);
    // Real arguments take the upper boundary value, hence the minus sign.
    if (z.im.sign() >= 0) return Complex(p.re, p.im - two_pi);
    return Complex(p.re, p.im + two_pi);
}

Complex EquilibriumMeasure::f_b(const Complex& z, const PrecisionContext& ctx) const {
    if (abs(z - Complex(b)) > b / 4) throw OutsideRadius("f_b: beyond the conformal radius");
    if (z.re == b && z.im.is_zero()) return Complex(Real(0.0, precision));
    Complex p = phi(z, ctx);
    Complex dz = z - Complex(b);
    Complex B = Real(9.0 / 16.0) * p * p / (dz * dz * dz);
    return dz * pow(B, Real(1) / 3);
}

Complex EquilibriumMeasure::f_0(const Complex& z, const PrecisionContext& ctx) const {
    if (abs(z) > b / 4) throw OutsideRadius("f_0: beyond the conformal radius");
    if (z.re.is_zero() && z.im.is_zero()) return Complex(Real(0.0, precision));
    Complex p = phi_L(z, ctx);
    return p * p / 16.0;
}

Real EquilibriumMeasure::f_b_deriv_edge() const {
    return pow(const_pi(precision) * psib, Real(2) / 3);
}

Real EquilibriumMeasure::f_0_deriv_edge() const {
    Real p = const_pi(precision) * psi0;
    return -(p * p);
}

EquilibriumMeasure build_measure(const Potential& V, int grid_n, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.mantissa_bits);
    EquilibriumMeasure m;
    m.pot = V;
    m.precision = ctx.mantissa_bits;
    m.c = solve_c(V, ctx);
    m.curve = build_curve(m.c, 512, ctx);
    m.b = m.curve.b;

    // Edge constants by quadratic extrapolation in sqrt(x) (resp.
    // sqrt(b - x)) along a geometric ladder.
    {
        Real h[3], y0v[3], ybv[3];
        for (int i = 0; i < 3; ++i) {
            Real xs = m.b * pow(Real(10.0), Real(-6 - 2 * i));
            h[i] = sqrt(xs);
            y0v[i] = psi_route(m.curve, V, xs, ctx) * h[i];
            Real xb = m.b * (1 - pow(Real(10.0), Real(-6 - 2 * i)));
            ybv[i] = psi_route(m.curve, V, xb, ctx) / sqrt(m.b - xb);
        }
        m.psi0 = extrapolate3(h, y0v);
        Real hb[3];
        for (int i = 0; i < 3; ++i) hb[i] = sqrt(m.b) * pow(Real(10.0), Real(-3 - i));
        m.psib = extrapolate3(hb, ybv);
        if (!(m.psi0 > 0.0) || !(m.psib > 0.0)) {
            throw NonConvergence("build_measure: edge constants not positive");
        }
    }

    int n = std::max(grid_n, 48);
    Real pi = const_pi();
    m.theta.resize(n + 1);
    m.S.resize(n + 1);
    m.bary_w.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        m.theta[j] = (pi / 4) * (1 - cos(pi * Real(j) / n));
        m.bary_w[j] = Real((j % 2 == 0) ? 1.0 : -1.0) * ((j == 0 || j == n) ? Real(0.5) : Real(1.0));
    }
    m.S[0] = m.psi0 * sqrt(m.b);
    m.S[n] = Real(0.0, ctx.mantissa_bits);
    for (int j = 1; j < n; ++j) {
        Real x = m.x_of_theta(m.theta[j]);
        m.S[j] = psi_route(m.curve, V, x, ctx) * sqrt(x * (m.b - x));
    }

    // Normalization sanity.
    Real mass = m.integrate_mu([](const Real&) { return Real(1.0); }, ctx);
    if (abs(mass - 1) > 1e-6) {
        throw NonConvergence("build_measure: mass deviates from 1 by " +
                             (mass - 1).to_string(6));
    }

    // Lagrange constant from the soft edge; the hard-edge identity is then a
    // consistency statement checked by the tests.
    m.ell = Real(0.0);
    Real gb = m.g(Complex(m.b), ctx).re;
    Real gtb = m.g_tilde(Complex(m.b), ctx).re;
    m.ell = gb + gtb - V(m.b);
    return m;
}

Real dmpk_density(const EquilibriumMeasure& m, const Real& x) {
    if (!(x > 0.0)) throw DomainError("dmpk_density: requires x > 0");
    return 2 * x * m.psi(x * x);
}

Real ohm_integral(const EquilibriumMeasure& m, const PrecisionContext& ctx) {
    auto f = [](const Real& lam) {
        Real c = cosh(sqrt(lam));
        return 1 / (c * c);
    };
    return m.integrate_mu(f, ctx);
}

}  // namespace sinhlab
