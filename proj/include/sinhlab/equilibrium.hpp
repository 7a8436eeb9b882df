#pragma once

#include "sinhlab/conformal.hpp"

#include <vector>

namespace sinhlab {

// External field of the energy functional. Linear fields V = x/M carry their
// closed forms; polynomial fields V = sum_k a_k x^k cover the general path.
// Analyticity on a neighborhood of [0, oo) is intrinsic for both kinds.
class Potential {
  public:
    enum class Kind { linear, poly };

    static Potential linear(const Real& M);
    // coeffs[k] multiplies x^(k+1).
    static Potential poly(const std::vector<Real>& coeffs);

    Kind kind() const { return kind_; }
    const Real& M() const { return M_; }

    Real operator()(const Real& x) const;
    Complex operator()(const Complex& z) const;
    Real deriv(const Real& x) const;
    Complex deriv(const Complex& z) const;
    Real deriv2(const Real& x) const;

    // U(x) = V'(x) sqrt(x) and its derivative, the density ingredient.
    Real U(const Real& x) const;
    Real U_deriv(const Real& u) const;
    // Endpoint behavior of U' at 0: u^(-1/2) when V'(0) != 0, u^(+1/2)
    // otherwise. Drives the quadrature hints.
    EdgeBehavior u_deriv_edge_at_zero() const;

    // Growth at infinity and the one-cut condition U' > 0, sampled
    // numerically. Throws DomainError on failure.
    void validate(const PrecisionContext& ctx) const;

  private:
    Kind kind_ = Kind::linear;
    Real M_ = Real(1.0);
    std::vector<Real> coeffs_;
};

// Equilibrium measure for a one-cut potential with a hard edge at 0: the
// parameter c solving the normalization equation, the endpoint b = b(c), the
// density psi on (0, b), its edge constants, and the Lagrange constant.
//
// The density is stored through S(theta) := psi(x) sqrt(x (b - x)) on the
// angular grid x = b sin^2(theta), theta in [0, pi/2], where S extends
// analytically to the closed interval; measure integrals reduce to
// int F dmu = 2 int_0^{pi/2} F(x(theta)) S(theta) dtheta.
class EquilibriumMeasure {
  public:
    Potential pot;
    Real c, b;
    Real psi0, psib, ell;
    SpectralCurve curve;
    mpfr_prec_t precision = 256;

    std::vector<Real> theta;   // Chebyshev points of [0, pi/2]
    std::vector<Real> S;       // S(theta_j)
    std::vector<Real> bary_w;  // barycentric weights

    Real x_of_theta(const Real& t) const;
    Real theta_of_x(const Real& x) const;
    Real S_at(const Real& t) const;  // barycentric interpolation
    Real psi(const Real& x) const;

    // (x_j, psi_j) view of the grid, edges excluded.
    std::vector<std::pair<Real, Real>> psi_grid() const;

    // mu([x, b]).
    Real mass_tail(const Real& x, const PrecisionContext& ctx) const;
    // int F dmu for a smooth integrand given in the x variable.
    Real integrate_mu(const RealFn& f_of_x, const PrecisionContext& ctx) const;

    // Log transforms. g is analytic off (-inf, b]; g_tilde off the preimage
    // of (-inf, f(b)] in the parabolic region P. Real arguments in (0, b)
    // take the upper boundary value.
    Complex g(const Complex& z, const PrecisionContext& ctx) const;
    Complex g_tilde(const Complex& z, const PrecisionContext& ctx) const;
    // int log|x - y| dmu(y) and int log|f(x) - f(y)| dmu(y) for x in (0, b).
    Real g_log_abs(const Real& x, const PrecisionContext& ctx) const;
    Real g_tilde_log_abs(const Real& x, const PrecisionContext& ctx) const;

    // phi = g + g_tilde - V - ell, and the hard-edge recentered branch
    // phi^L = phi -+ 2 pi i (upper/lower half plane).
    Complex phi(const Complex& z, const PrecisionContext& ctx) const;
    Complex phi_L(const Complex& z, const PrecisionContext& ctx) const;

    // Local conformal maps at the edges, through the analytic-factor forms
    // f_b = (z - b) [(9/16) phi^2/(z-b)^3]^(1/3), f_0 = z [phi_L^2/(16 z)].
    // Both throw OutsideRadius beyond |z - edge| <= b/4.
    Complex f_b(const Complex& z, const PrecisionContext& ctx) const;
    Complex f_0(const Complex& z, const PrecisionContext& ctx) const;
    Real f_b_deriv_edge() const;  // (pi psi_b)^(2/3)
    Real f_0_deriv_edge() const;  // -(pi psi_0)^2
};

// F(x) = (1/2pi i) closed-int J_x(xi) V'(scriptJ_x(xi)) / (sqrt(xi)(xi-1)) dxi
// over the spectral curve at parameter x; strictly increasing in x.
Real F_of(const Real& x, const Potential& V, const PrecisionContext& ctx);
Real F_of(const SpectralCurve& curve, const Potential& V, const PrecisionContext& ctx);

// The unique solution of F(x) = 2.
Real solve_c(const Potential& V, const PrecisionContext& ctx);

// Interaction kernel F(u; xi), positive off the diagonal, log-singular on it.
Real F_kernel(const SpectralCurve& curve, const Real& u, const Real& xi,
              const PrecisionContext& ctx);

// Density by the general quadrature path:
// psi(x) = 1/(4 pi^2 sqrt(x)) int_0^b U'(u) F(u; x) du.
Real density_psi(const SpectralCurve& curve, const Potential& V, const Real& x,
                 const PrecisionContext& ctx);

// Full construction; grid_n is the number of angular grid intervals.
EquilibriumMeasure build_measure(const Potential& V, int grid_n, const PrecisionContext& ctx);

// DMPK transmission-density change of variables rho(x; M) = 2 x psi(x^2),
// for the linear potential measure.
Real dmpk_density(const EquilibriumMeasure& m, const Real& x);
// int_0^b sech^2(sqrt(lambda)) psi(lambda) dlambda.
Real ohm_integral(const EquilibriumMeasure& m, const PrecisionContext& ctx);

}  // namespace sinhlab
