#include "sinhlab/specialfn.hpp"

#include <algorithm>
#include <cmath>

namespace sinhlab {

Complex unit_omega(mpfr_prec_t prec) {
    if (prec == 0) prec = Real::default_precision();
    PrecisionGuard guard(prec);
    return Complex(Real(-0.5), sqrt(Real(3)) / 2);
}

// ---------------------------------------------------------------------------
// The map f.

Complex map_f(const Complex& z) {
    mpfr_prec_t prec = z.precision();
    PrecisionGuard guard(prec + 16);
    if (abs(z) < 0.25) {
        // sum_{k>=1} 4^k z^k / (2 (2k)!) = z + z^2/3 + ...
        Complex term = z;
        Complex sum = z;
        for (int k = 1; k < 10000; ++k) {
            term = term * z * Real(4.0) / Real((2 * k + 1) * (2 * k + 2));
            sum += term;
            if (abs(term) < ldexp(abs(sum), -(prec + 8))) break;
        }
        return rounded_to(sum, prec);
    }
    Complex w = sqrt(z);
    Complex s = sinh(w);
    return rounded_to(s * s, prec);
}

Real map_f(const Real& x) {
    mpfr_prec_t prec = x.precision();
    PrecisionGuard guard(prec + 16);
    if (x.sign() >= 0) {
        Real s = sinh(sqrt(x));
        return (s * s).rounded_to(prec);
    }
    return map_f(Complex(x, Real(0.0, prec))).re;
}

Complex map_f_deriv(const Complex& z) {
    mpfr_prec_t prec = z.precision();
    PrecisionGuard guard(prec + 16);
    if (abs(z) < 0.25) {
        // sinh(2w)/(2w) = sum_k 4^k z^k / (2k+1)!
        Complex term(Real(1.0));
        Complex sum = term;
        for (int k = 0; k < 10000; ++k) {
            term = term * z * Real(4.0) / Real((2 * k + 2) * (2 * k + 3));
            sum += term;
            if (abs(term) < ldexp(abs(sum), -(prec + 8))) break;
        }
        return rounded_to(sum, prec);
    }
    Complex w = sqrt(z);
    return rounded_to(sinh(w) * cosh(w) / w, prec);
}

Real map_f_deriv(const Real& x) { return map_f_deriv(Complex(x, Real(0.0, x.precision()))).re; }

// ---------------------------------------------------------------------------
// arcosh.

Complex arcosh_principal(const Complex& z) {
    if (z.im.is_zero() && z.re <= 1.0) {
        throw BranchCut("arcosh_principal: argument on (-inf, 1]");
    }
    // log(z + sqrt(z-1) sqrt(z+1)); the two separate principal square roots
    // (not sqrt(z^2-1)) give exactly the branch cut (-inf, 1].
    return log(z + sqrt(z - 1.0) * sqrt(z + 1.0));
}

// ---------------------------------------------------------------------------
// Airy.

namespace {

struct AiryPair {
    Complex ai, aip;
};

// Maclaurin series for Ai and Ai'. Tracks the largest term and escalates the
// working precision until the cancellation is covered.
AiryPair airy_series(const Complex& z, mpfr_prec_t target) {
    double az = abs(z).to_double();
    long est = static_cast<long>(1.93 * std::pow(az, 1.5)) + 48;
    mpfr_prec_t work = target + est;
    for (int attempt = 0; attempt < 6; ++attempt) {
        PrecisionGuard guard(work);
        Real third = Real(1) / 3;
        Real c1 = pow(Real(3), -Real(2) / 3) / tgamma(Real(2) / 3);
        Real c2 = pow(Real(3), -third) / tgamma(third);
        Complex zz = rounded_to(z, work);
        Complex z3 = zz * zz * zz;

        if (abs(zz).is_zero()) {
            return AiryPair{Complex(c1.rounded_to(target)), Complex((-c2).rounded_to(target))};
        }

        // f = sum_k a_k z^{3k}, g = sum_k b_k z^{3k+1} with
        // a_{k+1} = a_k / ((3k+2)(3k+3)), b_{k+1} = b_k / ((3k+3)(3k+4)).
        // Derivatives accumulate (3k) a_k z^{3k} resp. (3k+1) b_k z^{3k+1},
        // divided once by z at the end.
        Complex tf(Real(1.0)), tg = zz;
        Complex f = tf, g = tg;
        Complex fp(Real(0.0)), gp = tg;
        Real maxterm(1.0);
        for (int k = 0; k < 100000; ++k) {
            tf = tf * z3 / Real((3 * k + 2) * (3 * k + 3));
            tg = tg * z3 / Real((3 * k + 3) * (3 * k + 4));
            f += tf;
            g += tg;
            fp += tf * Real(3 * k + 3);
            gp += tg * Real(3 * k + 4);
            maxterm = max(maxterm, max(abs(tf), abs(tg)));
            if (abs(tf) + abs(tg) < ldexp(max(abs(f), abs(g)), -(work + 8)) && k > 2) break;
        }
        AiryPair out;
        out.ai = c1 * f - c2 * g;
        out.aip = c1 * (fp / zz) - c2 * (gp / zz);
        // Cancellation check.
        Real scale = min(abs(out.ai), abs(out.aip));
        long cancel = maxterm.exponent() - scale.exponent();
        if (cancel < static_cast<long>(work - target) - 16) {
            return AiryPair{rounded_to(out.ai, target), rounded_to(out.aip, target)};
        }
        work = target + cancel + 64;
    }
    throw NonConvergence("airy_series: precision escalation failed");
}

// Poincare expansion, restricted to |arg z| <= pi/2 where the optimal
// truncation error of sum u_k xi^-k behaves like e^(-2|xi|). Returns false
// if that cannot reach the target tolerance.
bool airy_asymptotic(const Complex& z, mpfr_prec_t target, AiryPair& out) {
    mpfr_prec_t work = target + 32;
    PrecisionGuard guard(work);
    Complex zz = rounded_to(z, work);
    if (abs(arg(zz)) > const_pi() / 2) return false;
    Complex xi = Real(2) / 3 * pow(zz, Real(1.5));
    double axi = abs(xi).to_double();
    if (axi * 1.442695 < static_cast<double>(target) + 8) return false;

    Complex inv = 1.0 / xi;
    Complex term(Real(1.0));
    Complex s(Real(1.0)), sp(Real(1.0));
    Real prev = abs(term);
    bool reached = false;
    for (int k = 0; k < 100000; ++k) {
        // u_{k+1} = u_k (6k+1)(6k+5) / (72 (k+1)); the Ai' series has
        // v_k = -(6k+1)/(6k-1) u_k.
        term = term * Real((6 * k + 1) * (6 * k + 5)) / Real(72 * (k + 1)) * inv;
        Complex asgn = (k % 2 == 0) ? -term : term;
        Real at = abs(term);
        if (at > prev) break;  // past the optimal truncation point
        s += asgn;
        sp += asgn * Real(6 * k + 7) / Real(-(6 * k + 5));
        prev = at;
        if (at < ldexp(Real(1.0), -(static_cast<long>(target) + 8))) {
            reached = true;
            break;
        }
    }
    if (!reached) return false;
    Real spi = sqrt(const_pi());
    Complex zq = pow(zz, Real(0.25));
    Complex e = exp(-xi);
    out.ai = e / (2 * spi * zq) * s;
    out.aip = -zq * e / (2 * spi) * sp;
    out.ai = rounded_to(out.ai, target);
    out.aip = rounded_to(out.aip, target);
    return true;
}

AiryPair airy_pair(const Complex& z, mpfr_prec_t target) {
    PrecisionGuard guard(target + 32);
    Complex zz = rounded_to(z, target + 32);
    Real pi = const_pi();
    Real a = arg(zz);
    if (abs(a) <= 2 * pi / 3 + Real(1e-12)) {
        AiryPair out;
        if (airy_asymptotic(zz, target, out)) return out;
        return airy_series(zz, target);
    }
    // Rotate into good sectors: Ai(z) = -w Ai(w z) - w^2 Ai(w^2 z).
    Complex w = unit_omega(target + 32);
    Complex w2 = w * w;
    AiryPair p1 = airy_pair(w * zz, target + 8);
    AiryPair p2 = airy_pair(w2 * zz, target + 8);
    AiryPair out;
    out.ai = -(w * p1.ai) - (w2 * p2.ai);
    // d/dz Ai(w z) = w Ai'(w z): Ai'(z) = -w^2 Ai'(wz) - w^4 Ai'(w^2 z).
    out.aip = -(w2 * p1.aip) - (w * p2.aip);
    out.ai = rounded_to(out.ai, target);
    out.aip = rounded_to(out.aip, target);
    return out;
}

}  // namespace

Complex airy_ai(const Complex& z) { return airy_pair(z, z.precision()).ai; }
Complex airy_ai_deriv(const Complex& z) { return airy_pair(z, z.precision()).aip; }
Real airy_ai(const Real& x) { return airy_pair(Complex(x, Real(0.0, x.precision())), x.precision()).ai.re; }
Real airy_ai_deriv(const Real& x) {
    return airy_pair(Complex(x, Real(0.0, x.precision())), x.precision()).aip.re;
}

// ---------------------------------------------------------------------------
// Bessel.

namespace {

bool is_integer(const Real& a) { return a == floor(a); }

// Power series for J (sign = -1) or I (sign = +1), order alpha > -1.
// (z/2)^alpha with the principal branch.
Complex bessel_series(const Real& alpha, const Complex& z, int sign, mpfr_prec_t target) {
    double az = abs(z).to_double();
    long est = static_cast<long>(1.5 * az) + 48;
    mpfr_prec_t work = target + est;
    for (int attempt = 0; attempt < 6; ++attempt) {
        PrecisionGuard guard(work);
        Complex zz = rounded_to(z, work);
        Complex half = zz / 2;
        Complex q = half * half * Real(sign);
        Real al = alpha.rounded_to(work);
        Complex pref;
        if (abs(zz).is_zero()) {
            if (al.is_zero()) return Complex(Real(1.0, target));
            return Complex(Real(0.0, target));
        }
        pref = pow(half, al);
        Complex term = pref / tgamma(al + 1);
        Complex sum = term;
        Real maxterm = abs(term);
        for (int k = 1; k < 100000; ++k) {
            term = term * q / (Real(k) * (al + Real(k)));
            sum += term;
            maxterm = max(maxterm, abs(term));
            Real floor_scale = max(abs(sum), ldexp(maxterm, -64));
            if (abs(term) < ldexp(floor_scale, -(work + 8))) break;
        }
        long cancel = maxterm.exponent() - abs(sum).exponent();
        if (cancel < static_cast<long>(work - target) - 16) {
            return rounded_to(sum, target);
        }
        work = target + cancel + 64;
    }
    throw NonConvergence("bessel_series: precision escalation failed");
}

// Y_n for integer n >= 0 via the logarithmic series (harmonics in place of
// digamma values).
Complex bessel_y_integer(long n, const Complex& z, mpfr_prec_t target) {
    mpfr_prec_t work = target + 64 + static_cast<long>(1.5 * abs(z).to_double());
    PrecisionGuard guard(work);
    Complex zz = rounded_to(z, work);
    Real al(static_cast<double>(n));
    Real pi = const_pi();
    Complex half = zz / 2;
    Complex jn = bessel_series(al, zz, -1, work);
    Complex total = 2 * log(half) * jn / pi;

    // Finite sum: -(1/pi) (z/2)^{-n} sum_{k=0}^{n-1} (n-k-1)!/k! (z^2/4)^k
    if (n > 0) {
        Complex q = half * half;
        Real fact(1.0);
        for (long k = 1; k <= n - 1; ++k) fact *= Real(static_cast<double>(k));  // (n-1)!
        Complex term = pow(half, static_cast<int>(-n)) * fact;  // k = 0 term
        Complex fin = term;
        for (long k = 1; k <= n - 1; ++k) {
            term = term * q / Real(static_cast<double>(k)) / Real(static_cast<double>(n - k));
            fin += term;
        }
        total -= fin / pi;
    }

    // -(1/pi) (z/2)^n sum_k (psi(k+1)+psi(n+k+1)) (-z^2/4)^k / (k! (n+k)!)
    Real egamma = const_euler();
    Real hk(0.0), hnk(0.0);
    for (long m = 1; m <= n; ++m) hnk += Real(1.0) / Real(static_cast<double>(m));
    Real factnk(1.0);
    for (long m = 1; m <= n; ++m) factnk *= Real(static_cast<double>(m));
    Complex q = -(half * half);
    Complex term = pow(half, static_cast<int>(n)) / factnk;
    Complex sum = term * (hk + hnk - 2 * egamma);
    for (long k = 1; k < 100000; ++k) {
        term = term * q / Real(static_cast<double>(k)) / Real(static_cast<double>(n + k));
        hk += Real(1.0) / Real(static_cast<double>(k));
        hnk += Real(1.0) / Real(static_cast<double>(n + k));
        Complex piece = term * (hk + hnk - 2 * egamma);
        sum += piece;
        if (abs(piece) < ldexp(abs(sum) + abs(total), -(work + 8)) && k > 2) break;
    }
    total -= sum / pi;
    return rounded_to(total, target);
}

// K_n for integer n >= 0.
Complex bessel_k_integer(long n, const Complex& z, mpfr_prec_t target) {
    mpfr_prec_t work = target + 64 + static_cast<long>(1.5 * abs(z).to_double());
    PrecisionGuard guard(work);
    Complex zz = rounded_to(z, work);
    Real al(static_cast<double>(n));
    Complex half = zz / 2;
    Complex in = bessel_series(al, zz, +1, work);
    Real sgn = (n % 2 == 0) ? Real(-1.0) : Real(1.0);  // (-1)^{n+1}
    Complex total = sgn * log(half) * in;

    if (n > 0) {
        // (1/2) (z/2)^{-n} sum_{k=0}^{n-1} (n-k-1)!/k! (-z^2/4)^k
        Complex q = -(half * half);
        Real fact(1.0);
        for (long k = 1; k <= n - 1; ++k) fact *= Real(static_cast<double>(k));
        Complex term = pow(half, static_cast<int>(-n)) * fact;
        Complex fin = term;
        for (long k = 1; k <= n - 1; ++k) {
            term = term * q / Real(static_cast<double>(k)) / Real(static_cast<double>(n - k));
            fin += term;
        }
        total += fin / 2;
    }

    // (-1)^n (1/2) (z/2)^n sum_k (psi(k+1)+psi(n+k+1)) (z^2/4)^k / (k!(n+k)!)
    Real egamma = const_euler();
    Real hk(0.0), hnk(0.0);
    for (long m = 1; m <= n; ++m) hnk += Real(1.0) / Real(static_cast<double>(m));
    Real factnk(1.0);
    for (long m = 1; m <= n; ++m) factnk *= Real(static_cast<double>(m));
    Complex q = half * half;
    Complex term = pow(half, static_cast<int>(n)) / factnk;
    Complex sum = term * (hk + hnk - 2 * egamma);
    for (long k = 1; k < 100000; ++k) {
        term = term * q / Real(static_cast<double>(k)) / Real(static_cast<double>(n + k));
        hk += Real(1.0) / Real(static_cast<double>(k));
        hnk += Real(1.0) / Real(static_cast<double>(n + k));
        Complex piece = term * (hk + hnk - 2 * egamma);
        sum += piece;
        if (abs(piece) < ldexp(abs(sum) + abs(total), -(work + 8)) && k > 2) break;
    }
    Real s2 = (n % 2 == 0) ? Real(0.5) : Real(-0.5);
    total += s2 * sum;
    return rounded_to(total, target);
}

Complex bessel_y(const Real& alpha, const Complex& z, mpfr_prec_t target) {
    if (is_integer(alpha)) return bessel_y_integer(alpha.to_long(), z, target);
    mpfr_prec_t work = target + 64;
    PrecisionGuard guard(work);
    Real al = alpha.rounded_to(work);
    Real pi = const_pi();
    Complex ja = bessel_series(al, z, -1, work);
    Complex jma = bessel_series(-al, z, -1, work);
    Complex y = (ja * cos(al * pi) - jma) / sin(al * pi);
    return rounded_to(y, target);
}

Complex bessel_k(const Real& alpha, const Complex& z, mpfr_prec_t target) {
    if (is_integer(alpha)) return bessel_k_integer(alpha.to_long(), z, target);
    mpfr_prec_t work = target + 64;
    PrecisionGuard guard(work);
    Real al = alpha.rounded_to(work);
    Real pi = const_pi();
    Complex ia = bessel_series(al, z, +1, work);
    Complex ima = bessel_series(-al, z, +1, work);
    Complex k = pi / 2 * (ima - ia) / sin(al * pi);
    return rounded_to(k, target);
}

}  // namespace

Complex bessel(BesselKind kind, const Real& alpha, const Complex& z) {
    if (alpha <= -1.0) throw DomainError("bessel: order must be > -1");
    mpfr_prec_t target = std::max(z.precision(), alpha.precision());
    bool on_cut = z.im.is_zero() && z.re <= 0.0 && !z.re.is_zero();
    switch (kind) {
        case BesselKind::J:
            return bessel_series(alpha, z, -1, target);
        case BesselKind::I:
            return bessel_series(alpha, z, +1, target);
        case BesselKind::K:
            if (on_cut) throw BranchCut("bessel: K on (-inf, 0]");
            return bessel_k(alpha, z, target);
        case BesselKind::H1: {
            if (on_cut) throw BranchCut("bessel: H1 on (-inf, 0]");
            Complex j = bessel_series(alpha, z, -1, target + 16);
            Complex y = bessel_y(alpha, z, target + 16);
            return rounded_to(j + Complex(Real(0.0), Real(1.0)) * y, target);
        }
        case BesselKind::H2: {
            if (on_cut) throw BranchCut("bessel: H2 on (-inf, 0]");
            Complex j = bessel_series(alpha, z, -1, target + 16);
            Complex y = bessel_y(alpha, z, target + 16);
            return rounded_to(j - Complex(Real(0.0), Real(1.0)) * y, target);
        }
    }
    throw DomainError("bessel: unknown kind");
}

Complex bessel_deriv(BesselKind kind, const Real& alpha, const Complex& z) {
    mpfr_prec_t target = std::max(z.precision(), alpha.precision());
    PrecisionGuard guard(target + 16);
    Complex za = rounded_to(z, target + 16);
    Real al = alpha.rounded_to(target + 16);
    // J, Y, H: C_a' = C_{a-1} - (a/z) C_a ; use C_{a+1} form to stay above
    // order -1: C_a' = (a/z) C_a - C_{a+1}.
    switch (kind) {
        case BesselKind::J:
        case BesselKind::H1:
        case BesselKind::H2: {
            Complex ca = bessel(kind, al, za);
            Complex cap = bessel(kind, al + 1, za);
            return rounded_to(al / za * ca - cap, target);
        }
        case BesselKind::I: {
            // I_a' = I_{a+1} + (a/z) I_a
            Complex ia = bessel(BesselKind::I, al, za);
            Complex iap = bessel(BesselKind::I, al + 1, za);
            return rounded_to(al / za * ia + iap, target);
        }
        case BesselKind::K: {
            // K_a' = -K_{a+1} + (a/z) K_a
            Complex ka = bessel(BesselKind::K, al, za);
            Complex kap = bessel(BesselKind::K, al + 1, za);
            return rounded_to(al / za * ka - kap, target);
        }
    }
    throw DomainError("bessel_deriv: unknown kind");
}

// ---------------------------------------------------------------------------
// Parametrix matrices.

namespace {

// A point counts as on-ray only when its angle agrees with the ray to within
// the arithmetic noise floor of the input precision.
void check_off_ray(const Real& a, const Real& ray, mpfr_prec_t prec, const char* what) {
    if (abs(a - ray) < ldexp(Real(4.0), 8 - static_cast<long>(prec))) throw OnContour(what);
}

}  // namespace

ParametrixMatrix psi_airy(const Complex& zeta) {
    mpfr_prec_t prec = zeta.precision();
    PrecisionGuard guard(prec + 16);
    Real pi = const_pi();
    Real a = arg(zeta);
    Real twothirds_r = 2 * pi / 3;
    double twothirds = twothirds_r.to_double();
    check_off_ray(a, Real(0.0), prec, "psi_airy: on ray arg = 0");
    check_off_ray(a, twothirds_r, prec, "psi_airy: on ray arg = 2pi/3");
    check_off_ray(a, -twothirds_r, prec, "psi_airy: on ray arg = -2pi/3");
    check_off_ray(a, pi, prec, "psi_airy: on ray arg = pi");
    check_off_ray(a, -pi, prec, "psi_airy: on ray arg = pi");

    Complex w = unit_omega();
    Complex w2 = w * w;
    Real spre = sqrt(2 * pi);
    Complex rot = exp(Complex(Real(0.0), -pi / 4));  // e^{-i pi/4}
    Complex pref = spre * rot;

    auto y0 = [&](const Complex& t) { return pref * airy_ai(t); };
    auto y0p = [&](const Complex& t) { return pref * airy_ai_deriv(t); };
    // y1(z) = pref w Ai(w z), y1'(z) = pref w^2 Ai'(w z)
    // y2(z) = pref w^2 Ai(w^2 z), y2'(z) = pref w^4 Ai'(w^2 z) = pref w Ai'(w^2 z)

    Mat2 m;
    std::string sector;
    if (a > 0 && a < twothirds) {
        sector = "arg in (0, 2pi/3)";
        m.a = y0(zeta);
        m.b = -(pref * w2 * airy_ai(w2 * zeta));
        m.c = y0p(zeta);
        m.d = -(pref * w * airy_ai_deriv(w2 * zeta));
    } else if (a > twothirds) {
        sector = "arg in (2pi/3, pi)";
        m.a = -(pref * w * airy_ai(w * zeta));
        m.b = -(pref * w2 * airy_ai(w2 * zeta));
        m.c = -(pref * w2 * airy_ai_deriv(w * zeta));
        m.d = -(pref * w * airy_ai_deriv(w2 * zeta));
    } else if (a < -twothirds) {
        sector = "arg in (-pi, -2pi/3)";
        m.a = -(pref * w2 * airy_ai(w2 * zeta));
        m.b = pref * w * airy_ai(w * zeta);
        m.c = -(pref * w * airy_ai_deriv(w2 * zeta));
        m.d = pref * w2 * airy_ai_deriv(w * zeta);
    } else {
        sector = "arg in (-2pi/3, 0)";
        m.a = y0(zeta);
        m.b = pref * w * airy_ai(w * zeta);
        m.c = y0p(zeta);
        m.d = pref * w2 * airy_ai_deriv(w * zeta);
    }
    m.a = rounded_to(m.a, prec);
    m.b = rounded_to(m.b, prec);
    m.c = rounded_to(m.c, prec);
    m.d = rounded_to(m.d, prec);
    return ParametrixMatrix{m, sector};
}

ParametrixMatrix psi_bessel(const Real& alpha, const Complex& zeta) {
    mpfr_prec_t prec = std::max(zeta.precision(), alpha.precision());
    PrecisionGuard guard(prec + 16);
    Real pi = const_pi();
    Real a = arg(zeta);
    Real twothirds_r = 2 * pi / 3;
    double twothirds = twothirds_r.to_double();
    check_off_ray(a, twothirds_r, prec, "psi_bessel: on ray arg = 2pi/3");
    check_off_ray(a, -twothirds_r, prec, "psi_bessel: on ray arg = -2pi/3");
    check_off_ray(a, pi, prec, "psi_bessel: on ray arg = pi");
    check_off_ray(a, -pi, prec, "psi_bessel: on ray arg = pi");

    Complex i_unit(Real(0.0), Real(1.0));
    Complex zc = rounded_to(zeta, prec + 16);
    Real al = alpha.rounded_to(prec + 16);

    // w0 = I_a(2 zeta^(1/2)), w1 = (-i/pi) K_a(2 zeta^(1/2)),
    // w2 = (1/2) H1_a(2 (-zeta)^(1/2)), w3 = (1/2) H2_a(2 (-zeta)^(1/2));
    // derivatives with respect to zeta.
    Mat2 core;
    std::string sector;
    if (abs(a) < twothirds) {
        sector = "arg in (-2pi/3, 2pi/3)";
        Complex sz = sqrt(zc);
        Complex x = 2 * sz;
        Complex w0 = bessel(BesselKind::I, al, x);
        Complex w1 = -i_unit / pi * bessel(BesselKind::K, al, x);
        Complex w0p = bessel_deriv(BesselKind::I, al, x) / sz;
        Complex w1p = -i_unit / pi * bessel_deriv(BesselKind::K, al, x) / sz;
        core = Mat2{w0, w1, w0p, w1p};
    } else {
        Complex snz = sqrt(-zc);
        Complex x = 2 * snz;
        Complex h1 = bessel(BesselKind::H1, al, x);
        Complex h2 = bessel(BesselKind::H2, al, x);
        Complex h1d = bessel_deriv(BesselKind::H1, al, x);
        Complex h2d = bessel_deriv(BesselKind::H2, al, x);
        // d/dzeta of H(2 sqrt(-zeta)) picks up the factor -1/sqrt(-zeta).
        Complex w2 = h1 / 2, w3 = h2 / 2;
        Complex w2p = -h1d / (2 * snz), w3p = -h2d / (2 * snz);
        Complex ea = exp(i_unit * (al * pi / 2));
        Complex eai = 1.0 / ea;
        if (a > 0) {
            sector = "arg in (2pi/3, pi)";
            core = Mat2{w2 * ea, -w3 * eai, w2p * ea, -w3p * eai};
        } else {
            sector = "arg in (-pi, -2pi/3)";
            core = Mat2{w3 * eai, w2 * ea, w3p * eai, w2p * ea};
        }
    }
    Mat2 pre{Complex(Real(1.0)), Complex(Real(0.0)), Complex(Real(0.0)),
             -2 * pi * i_unit * zc};
    Mat2 m = pre * core;
    m.a = rounded_to(m.a, prec);
    m.b = rounded_to(m.b, prec);
    m.c = rounded_to(m.c, prec);
    m.d = rounded_to(m.d, prec);
    return ParametrixMatrix{m, sector};
}

}  // namespace sinhlab
