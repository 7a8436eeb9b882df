#include "sinhlab/numerics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace sinhlab {

PrecisionContext PrecisionContext::make(mpfr_prec_t bits, const Real& abs_tol, const Real& rel_tol,
                                        int max_refinements) {
    if (bits < 24) throw DomainError("PrecisionContext: mantissa_bits too small");
    if (max_refinements < 1) throw DomainError("PrecisionContext: max_refinements must be >= 1");
    Real floor_tol = ldexp(Real(1.0, bits), -(bits - 8));
    if (abs_tol < floor_tol || rel_tol < floor_tol) {
        throw DomainError("PrecisionContext: tolerance cannot beat the arithmetic");
    }
    PrecisionContext ctx;
    ctx.mantissa_bits = bits;
    ctx.abs_tol = abs_tol.rounded_to(bits);
    ctx.rel_tol = rel_tol.rounded_to(bits);
    ctx.max_refinements = max_refinements;
    return ctx;
}

PrecisionContext PrecisionContext::near_arithmetic(mpfr_prec_t bits, int slack_bits) {
    Real tol = ldexp(Real(1.0, bits), -(bits - 8 - slack_bits));
    return make(bits, tol, tol, 64);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes by Newton iteration on P_n.

namespace {

GaussLegendre compute_gauss_legendre(int n, mpfr_prec_t prec) {
    PrecisionGuard guard(prec + 16);
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    Real pi = const_pi();
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev-based initial guess.
        Real x = cos(pi * (Real(i) + 0.75) / (Real(n) + 0.5));
        Real dp(0.0);
        for (int iter = 0; iter < 200; ++iter) {
            // Evaluate P_n(x) and P_n'(x) by the three-term recurrence.
            Real p0(1.0), p1 = x;
            for (int k = 2; k <= n; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = Real(n) * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (abs(dx) < ldexp(Real(1.0), -static_cast<long>(prec) - 8)) break;
        }
        // One more recurrence pass for the weight at the converged node.
        Real p0(1.0), p1 = x;
        for (int k = 2; k <= n; ++k) {
            Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = Real(n) * (x * p1 - p0) / (x * x - 1);
        Real w = 2 / ((1 - x * x) * dp * dp);
        gl.nodes[i] = -x;
        gl.weights[i] = w;
        gl.nodes[n - 1 - i] = x;
        gl.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        gl.nodes[n / 2] = Real(0.0);
        // weight recomputed by the loop above when i == n/2; ensure it is set
        // for even symmetry when the loop skipped the center.
    }
    // Round to the requested precision.
    for (int i = 0; i < n; ++i) {
        gl.nodes[i] = gl.nodes[i].rounded_to(prec);
        gl.weights[i] = gl.weights[i].rounded_to(prec);
    }
    return gl;
}

std::mutex g_gl_mutex;
std::map<std::pair<int, mpfr_prec_t>, GaussLegendre> g_gl_cache;

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
    mpfr_prec_t prec = Real::default_precision();
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto key = std::make_pair(n, prec);
    auto it = g_gl_cache.find(key);
    if (it == g_gl_cache.end()) {
        it = g_gl_cache.emplace(key, compute_gauss_legendre(n, prec)).first;
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// Adaptive quadrature.

namespace {

// Generic over the value type (Real or Complex).
template <typename V, typename F>
struct PanelIntegrator {
    const F& f;
    int order_low;
    int order_high;

    V rule(const Real& a, const Real& b, int order) const {
        const GaussLegendre& gl = gauss_legendre(order);
        Real half = (b - a) / 2;
        Real mid = (a + b) / 2;
        V acc{};
        for (size_t i = 0; i < gl.nodes.size(); ++i) {
            acc += gl.weights[i] * f(mid + half * gl.nodes[i]);
        }
        return half * acc;
    }

    // Returns (value, error estimate) accumulated over an adaptive bisection.
    void integrate(const Real& a, const Real& b, const Real& tol, int max_depth, V& value,
                   Real& err) const {
        struct Panel {
            Real a, b;
            int depth;
        };
        std::vector<Panel> stack{{a, b, 0}};
        value = V{};
        err = Real(0.0);
        Real span = b - a;
        while (!stack.empty()) {
            Panel p = stack.back();
            stack.pop_back();
            V lo = rule(p.a, p.b, order_low);
            V hi = rule(p.a, p.b, order_high);
            Real e = absval(hi - lo);
            // Error budget proportional to panel length.
            Real budget = tol * (p.b - p.a) / span;
            if (e <= budget || p.depth >= max_depth) {
                if (e > budget) {
                    throw NonConvergence("integrate_adaptive: panel failed to reach tolerance");
                }
                value += hi;
                err += e;
            } else {
                Real m = (p.a + p.b) / 2;
                stack.push_back({p.a, m, p.depth + 1});
                stack.push_back({m, p.b, p.depth + 1});
            }
        }
    }

    static Real absval(const Real& v) { return abs(v); }
    static Real absval(const Complex& v) { return abs(v); }
};

// Applies the sin^2 substitution for declared +-1/2 endpoint exponents and
// returns the transformed integrand on [0, 1] (identity if both ends smooth).
//
// With u = a + (b-a) sin^2(pi t / 2):
//   du = (b-a) (pi/2) sin(pi t) dt,
// which supplies a factor vanishing linearly at both ends, regularizing
// u^(+-1/2) endpoint behavior on either side.
template <typename V, typename FR>
std::function<V(const Real&)> substituted(const FR& f, const Real& a, const Real& b,
                                          EdgeBehavior left, EdgeBehavior right, bool& used) {
    used = (left != EdgeBehavior::smooth) || (right != EdgeBehavior::smooth);
    if (!used) return nullptr;
    Real len = b - a;
    return [f, a, len](const Real& t) -> V {
        Real pi = const_pi(t.precision());
        Real s = sin(pi * t / 2);
        Real u = a + len * s * s;
        Real jac = len * (pi / 2) * sin(pi * t);
        return jac * f(u);
    };
}

template <typename V, typename FR>
void integrate_impl(const FR& f, const Real& a, const Real& b, const PrecisionContext& ctx,
                    EdgeBehavior left, EdgeBehavior right, V& value, Real& err) {
    if (!(a < b)) throw DomainError("integrate_adaptive: requires a < b");
    PrecisionGuard guard(ctx.mantissa_bits);
    Real aa = a.rounded_to(ctx.mantissa_bits), bb = b.rounded_to(ctx.mantissa_bits);

    bool used = false;
    std::function<V(const Real&)> g = substituted<V>(f, aa, bb, left, right, used);
    if (!used) g = [&f](const Real& u) -> V { return f(u); };
    Real lo = used ? Real(0.0) : aa;
    Real hi = used ? Real(1.0) : bb;

    PanelIntegrator<V, std::function<V(const Real&)>> worker{g, 15, 31};

    // Coarse pass estimates the scale of the result; the refinement then
    // targets max(abs_tol, rel_tol * scale).
    V rough = worker.rule(lo, hi, 31);
    Real scale = max(PanelIntegrator<V, std::function<V(const Real&)>>::absval(rough), Real(1e-300));
    Real tol = max(ctx.abs_tol, ctx.rel_tol * scale);
    worker.integrate(lo, hi, tol, ctx.max_refinements, value, err);
}

}  // namespace

QuadratureResult integrate_adaptive(const RealFn& f, const Real& a, const Real& b,
                                    const PrecisionContext& ctx, EdgeBehavior left,
                                    EdgeBehavior right) {
    QuadratureResult r;
    integrate_impl<Real>(f, a, b, ctx, left, right, r.value, r.error_estimate);
    return r;
}

ComplexQuadratureResult integrate_adaptive_complex(const ComplexOfRealFn& f, const Real& a,
                                                   const Real& b, const PrecisionContext& ctx,
                                                   EdgeBehavior left, EdgeBehavior right) {
    ComplexQuadratureResult r;
    integrate_impl<Complex>(f, a, b, ctx, left, right, r.value, r.error_estimate);
    return r;
}

Real integrate_log_singular(const RealFn& f, const Real& s0, const Real& a, const Real& b,
                            const PrecisionContext& ctx, EdgeBehavior left, EdgeBehavior right) {
    if (!(a < s0 && s0 < b)) throw DomainError("integrate_log_singular: s0 must lie in (a, b)");
    PrecisionGuard guard(ctx.mantissa_bits);
    // The sin^2 substitution toward s0 tames g(u) log|u - s0|: the Jacobian
    // vanishes linearly at the singular end, leaving a t*log(t)-type integrand
    // the adaptive engine resolves quickly.
    Real la = integrate_adaptive(f, a, s0, ctx, left, EdgeBehavior::inverse_sqrt).value;
    Real lb = integrate_adaptive(f, s0, b, ctx, EdgeBehavior::inverse_sqrt, right).value;
    return la + lb;
}

// ---------------------------------------------------------------------------
// Contours.

ContourSamples ContourSamples::circle(const Complex& center, const Real& radius, int n_nodes) {
    if (n_nodes < 8) throw DomainError("ContourSamples: node count >= 8 required");
    ContourSamples cs;
    cs.closed = true;
    Real two_pi = 2 * const_pi();
    auto fill = [&](int n, std::vector<Complex>& nodes, std::vector<Complex>& weights) {
        nodes.reserve(n);
        weights.reserve(n);
        for (int j = 0; j < n; ++j) {
            Real t = two_pi * Real(j) / Real(n);
            Complex e = polar(radius, t);
            nodes.push_back(center + e);
            // d s / d t * (2 pi / n) for the uniform trapezoid.
            weights.push_back(Complex(-e.im, e.re) * (two_pi / Real(n)));
        }
    };
    fill(2 * n_nodes, cs.nodes, cs.weights);
    fill(n_nodes, cs.coarse_nodes, cs.coarse_weights);
    return cs;
}

ContourSamples ContourSamples::from_parametrization(const std::function<Complex(const Real&)>& s,
                                                    const std::function<Complex(const Real&)>& derivative,
                                                    const Real& t0, const Real& t1, int panels,
                                                    int order, bool closed) {
    ContourSamples cs;
    cs.closed = closed;
    auto fill = [&](int np, int od, std::vector<Complex>& nodes, std::vector<Complex>& weights) {
        const GaussLegendre& gl = gauss_legendre(od);
        Real h = (t1 - t0) / np;
        for (int p = 0; p < np; ++p) {
            Real pa = t0 + h * p;
            Real mid = pa + h / 2;
            Real half = h / 2;
            for (size_t i = 0; i < gl.nodes.size(); ++i) {
                Real t = mid + half * gl.nodes[i];
                nodes.push_back(s(t));
                weights.push_back(derivative(t) * (half * gl.weights[i]));
            }
        }
    };
    fill(2 * panels, order, cs.nodes, cs.weights);
    fill(panels, order, cs.coarse_nodes, cs.coarse_weights);
    return cs;
}

void ContourSamples::append(const ContourSamples& other) {
    nodes.insert(nodes.end(), other.nodes.begin(), other.nodes.end());
    weights.insert(weights.end(), other.weights.begin(), other.weights.end());
    coarse_nodes.insert(coarse_nodes.end(), other.coarse_nodes.begin(), other.coarse_nodes.end());
    coarse_weights.insert(coarse_weights.end(), other.coarse_weights.begin(),
                          other.coarse_weights.end());
}

Complex integrate_contour(const ComplexFn& f, const ContourSamples& contour,
                          const PrecisionContext& ctx) {
    if (contour.nodes.size() < 8) throw DomainError("integrate_contour: node count >= 8 required");
    PrecisionGuard guard(ctx.mantissa_bits);
    Complex fine, coarse;
    for (size_t i = 0; i < contour.nodes.size(); ++i) {
        fine += contour.weights[i] * f(contour.nodes[i]);
    }
    for (size_t i = 0; i < contour.coarse_nodes.size(); ++i) {
        coarse += contour.coarse_weights[i] * f(contour.coarse_nodes[i]);
    }
    Real drift = abs(fine - coarse);
    if (drift > ctx.tolerance_for(abs(fine))) {
        throw NonConvergence("integrate_contour: node doubling moved the result by " +
                             drift.to_string(6));
    }
    return fine;
}

// ---------------------------------------------------------------------------
// Root finding.

Real find_root_bisect(const RealFn& f, const Real& lo_in, const Real& hi_in,
                      const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.mantissa_bits);
    Real lo = lo_in.rounded_to(ctx.mantissa_bits), hi = hi_in.rounded_to(ctx.mantissa_bits);
    if (!(lo < hi)) throw DomainError("find_root_bisect: requires lo < hi");
    Real flo = f(lo), fhi = f(hi);
    if (flo.is_zero()) return lo;
    if (fhi.is_zero()) return hi;
    if (flo.sign() == fhi.sign()) throw NoSignChange("find_root_bisect: no sign change over bracket");
    Real mid(0.0), fmid(0.0);
    long max_iter = static_cast<long>(ctx.mantissa_bits) + 64;
    for (long i = 0; i < max_iter; ++i) {
        mid = (lo + hi) / 2;
        fmid = f(mid);
        if (fmid.is_zero()) return mid;
        if (fmid.sign() == flo.sign()) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        if (hi - lo <= ctx.rel_tol * abs(mid) + ctx.abs_tol && abs(fmid) <= ctx.abs_tol) {
            return mid;
        }
    }
    if (abs(fmid) <= ctx.abs_tol) return mid;
    throw NonConvergence("find_root_bisect: |f| did not reach abs_tol");
}

Real find_root_newton(const RealFn& f, const RealFn& fprime, const Real& seed,
                      const PrecisionContext& ctx, const Real* bracket_lo, const Real* bracket_hi) {
    PrecisionGuard guard(ctx.mantissa_bits);
    Real x = seed.rounded_to(ctx.mantissa_bits);
    Real fx = f(x);
    long max_iter = static_cast<long>(ctx.mantissa_bits) + 64;
    for (long i = 0; i < max_iter; ++i) {
        if (abs(fx) <= ctx.abs_tol) return x;
        Real d = fprime(x);
        if (d.is_zero() || !d.is_finite()) break;
        Real step = fx / d;
        Real xn = x - step;
        if (!xn.is_finite()) break;
        if (bracket_lo && bracket_hi && (xn < *bracket_lo || xn > *bracket_hi)) break;
        Real fxn = f(xn);
        if (!fxn.is_finite()) break;
        if (abs(step) <= ctx.rel_tol * abs(xn) + ctx.abs_tol && abs(fxn) <= ctx.abs_tol) {
            return xn;
        }
        x = xn;
        fx = fxn;
    }
    if (abs(fx) <= ctx.abs_tol) return x;
    if (bracket_lo && bracket_hi) {
        return find_root_bisect(f, *bracket_lo, *bracket_hi, ctx);
    }
    throw NewtonDiverged("find_root_newton: iteration diverged and no bracket known");
}

}  // namespace sinhlab
