#pragma once

#include "sinhlab/complex.hpp"
#include "sinhlab/errors.hpp"
#include "sinhlab/real.hpp"

#include <functional>
#include <vector>

namespace sinhlab {

// Arithmetic precision plus the target tolerances that govern every numeric
// routine. Tolerances cannot beat the arithmetic: abs_tol, rel_tol >=
// 2^(8 - mantissa_bits).
struct PrecisionContext {
    mpfr_prec_t mantissa_bits = 256;
    Real abs_tol;
    Real rel_tol;
    int max_refinements = 48;

    static PrecisionContext make(mpfr_prec_t bits = 256, const Real& abs_tol = Real(1e-14),
                                 const Real& rel_tol = Real(1e-12), int max_refinements = 48);
    // One with tolerances a fixed number of bits above the arithmetic floor.
    static PrecisionContext near_arithmetic(mpfr_prec_t bits, int slack_bits = 32);

    Real tolerance_for(const Real& scale) const { return max(abs_tol, rel_tol * abs(scale)); }
};

enum class EdgeBehavior {
    smooth,        // integrand regular at the endpoint
    inverse_sqrt,  // integrand ~ (u - a)^(-1/2)
    sqrt,          // integrand ~ (u - a)^(1/2)
};

using RealFn = std::function<Real(const Real&)>;
using ComplexFn = std::function<Complex(const Complex&)>;
using ComplexOfRealFn = std::function<Complex(const Real&)>;

struct QuadratureResult {
    Real value;
    Real error_estimate;
};
struct ComplexQuadratureResult {
    Complex value;
    Real error_estimate;
};

// Adaptive Gauss-Legendre over [a, b]. Endpoint exponents +-1/2 are handled
// by the substitution u = a + (b - a) sin^2(theta); anything else must be
// smooth up to the boundary. Throws NonConvergence if the nested-rule error
// estimate cannot reach tolerance within ctx.max_refinements bisection levels,
// DomainError if a >= b.
QuadratureResult integrate_adaptive(const RealFn& f, const Real& a, const Real& b,
                                    const PrecisionContext& ctx,
                                    EdgeBehavior left = EdgeBehavior::smooth,
                                    EdgeBehavior right = EdgeBehavior::smooth);
ComplexQuadratureResult integrate_adaptive_complex(const ComplexOfRealFn& f, const Real& a,
                                                   const Real& b, const PrecisionContext& ctx,
                                                   EdgeBehavior left = EdgeBehavior::smooth,
                                                   EdgeBehavior right = EdgeBehavior::smooth);

// Integral of f over [a, b] where f(u) = g(u) log|u - s0| + smooth with g
// continuous and s0 an interior point. Splits at s0 and treats each side with
// the endpoint rule.
Real integrate_log_singular(const RealFn& f, const Real& s0, const Real& a, const Real& b,
                            const PrecisionContext& ctx,
                            EdgeBehavior left = EdgeBehavior::smooth,
                            EdgeBehavior right = EdgeBehavior::smooth);

// Discretized contour: quadrature nodes and weights such that
// integral f ds ~= sum_j w_j f(s_j). Two refinement levels are stored so the
// integration can certify stability under node doubling. For closed contours
// the orientation is positive (counterclockwise).
struct ContourSamples {
    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    std::vector<Complex> coarse_nodes;
    std::vector<Complex> coarse_weights;
    bool closed = false;

    static ContourSamples circle(const Complex& center, const Real& radius, int n_nodes);
    // Builds samples from an analytic parametrization s(t), t in [t0, t1],
    // with panels * order Gauss-Legendre nodes. `derivative` is ds/dt.
    static ContourSamples from_parametrization(const std::function<Complex(const Real&)>& s,
                                               const std::function<Complex(const Real&)>& derivative,
                                               const Real& t0, const Real& t1, int panels, int order,
                                               bool closed);
    void append(const ContourSamples& other);
    size_t size() const { return nodes.size(); }
};

// Evaluates the contour integral of an analytic integrand on both stored node
// sets and returns the finer one; throws NonConvergence if doubling the node
// count moves the result by more than tolerance.
Complex integrate_contour(const ComplexFn& f, const ContourSamples& contour,
                          const PrecisionContext& ctx);

enum class RootMode { bisect, newton };

// Bisection: requires f(lo) and f(hi) of opposite sign; refines until the
// bracket width is below rel_tol*|root| + abs_tol and |f(root)| <= abs_tol.
Real find_root_bisect(const RealFn& f, const Real& lo, const Real& hi, const PrecisionContext& ctx);

// Newton with derivative callback; falls back to bisection on the bracket if
// given one and the iteration wanders or stalls.
Real find_root_newton(const RealFn& f, const RealFn& fprime, const Real& seed,
                      const PrecisionContext& ctx, const Real* bracket_lo = nullptr,
                      const Real* bracket_hi = nullptr);

// Gauss-Legendre nodes/weights on [-1, 1] at the current default precision.
// Cached per (n, precision).
struct GaussLegendre {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const GaussLegendre& gauss_legendre(int n);

}  // namespace sinhlab
