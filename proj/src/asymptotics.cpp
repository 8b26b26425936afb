#include "bteo/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "bteo/quadrature.hpp"
#include "bteo/specfun.hpp"

namespace bteo::asym {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr cplx kI{0.0, 1.0};

Mode effective_mode(const Mode& k, Chirality ch) {
    return ch == Chirality::negative ? k : k.flipped();
}

// Like derive_scalars, but admits t_A = 0 (the large-|tau| expansion is
// stated for tau_A >= 0).
struct LooseScalars {
    double delta = 0.0;
    double s = 0.0;
    double s_A = 0.0;
    double sigma_A = 0.0;
    double tau = 0.0;
    double tau_A = 0.0;
    double kappa = 0.0;
    double eta = 0.0;
    cplx k_plus;
};

LooseScalars loose_scalars(const Background& bg, const Mode& k, double t_A, double t) {
    if (!(t > 0.0) || t_A < 0.0 || t_A > t)
        throw std::domain_error("asym: needs 0 <= t_A <= t with t > 0");
    LooseScalars d;
    d.delta = derived_delta(bg);
    d.s = scale_s(bg, t);
    d.s_A = t_A == 0.0 ? 0.0 : scale_s(bg, t_A);
    d.sigma_A = d.s_A / d.s;
    d.tau = 2.0 * k.k3 * d.s / bg.mu;
    d.tau_A = 2.0 * k.k3 * d.s_A / bg.mu;
    d.kappa = std::hypot(k.k1, k.k2);
    if (k.k3 != 0.0)
        d.eta = d.kappa * d.kappa / (2.0 * std::pow(std::abs(k.k3), 2.0 * d.delta));
    double phase = bg.t_ref == 0.0 ? 0.0 : 2.0 * k.k3 * std::pow(bg.t_ref, bg.mu) / bg.mu;
    d.k_plus = cplx(k.k2, k.k1) * std::exp(cplx(0.0, phase));
    return d;
}

// 1F1(a; a+1; z): Taylor series up to |z| = 30, compound large-argument
// expansion beyond (the algebraic sector terminates for this parameter pair).
cplx kummer_ratio(double a, cplx z) {
    const cplx aa(a, 0.0), bb(a + 1.0, 0.0);
    if (std::abs(z) <= 30.0) return specfun::kummer_1f1(aa, bb, z);
    return specfun::kummer_1f1_asymptotic(aa, bb, z);
}

// Entire extensions of the trigonometric integrals: si is odd, and
// ci_tilde(x) = Ci(x) - ln(x) extends to an even entire function.
struct EntireSiCi {
    double si = 0.0;
    double ci_tilde = 0.0;
};

EntireSiCi entire_si_ci(double x) {
    const double ax = std::abs(x);
    EntireSiCi out;
    if (ax <= 1.0) {
        // short power series: si = sum (-1)^n x^(2n+1)/((2n+1)(2n+1)!),
        // ci_tilde = gamma + sum (-1)^n x^(2n)/((2n)(2n)!)
        const double x2 = x * x;
        double si = 0.0;
        double num = x;  // x^(2n+1)/(2n+1)!
        for (int n = 0; n <= 14; ++n) {
            si += num / (2.0 * n + 1.0);
            num *= -x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
        }
        out.si = si;
        double ct = 0.5772156649015329;
        double cnum = -x2 / 2.0;  // (-1)^n x^(2n)/(2n)! starting at n=1
        for (int n = 1; n <= 14; ++n) {
            ct += cnum / (2.0 * n);
            cnum *= -x2 / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
        }
        out.ci_tilde = ct;
        return out;
    }
    specfun::SiCi sc = specfun::sine_cosine_integrals(ax);
    out.si = x < 0.0 ? -sc.si : sc.si;
    out.ci_tilde = sc.ci - std::log(ax);
    return out;
}

// i e^{-ix}/x * sum_n n! (-ix)^{-n}, truncated at the smallest term
// (superasymptotic rule; the series is the large-argument tail of the
// trigonometric integrals).
cplx superasym_tail(double x) {
    const cplx mix = -kI * x;
    cplx sum = 1.0, term = 1.0;
    double prev = 1.0;
    for (int n = 1; n <= 60; ++n) {
        term *= static_cast<double>(n) / mix;
        const double mag = std::abs(term);
        if (mag >= prev) break;
        sum += term;
        prev = mag;
    }
    return kI * std::exp(-kI * x) / x * sum;
}

}  // namespace

AsymptoticTerms asymptotic_terms(const Background& bg, const Mode& k, double t_A, double t,
                                 double tau_min) {
    if (k.k3 == 0.0) throw std::domain_error("asymptotic_terms: needs k3 != 0");
    LooseScalars d = loose_scalars(bg, k, t_A, t);
    AsymptoticTerms out;
    out.delta_range_ok = d.delta > 0.0 && d.delta < 1.0 / 3.0;
    out.tau_large_ok = std::abs(d.tau) >= tau_min;
    const double e2d = std::exp(2.0 * (1.0 - d.delta));
    const double shape = d.eta * std::pow(bg.mu / 2.0, 2.0 * d.delta - 2.0) *
                         std::pow(std::abs(d.tau), 2.0 * d.delta - 2.0);
    const cplx window = 1.0 / (1.0 - kI * (1.0 - d.delta) / d.tau);
    out.e1 = (e2d - 1.0) / (4.0 * (1.0 - d.delta)) * shape * window;
    out.e2 = e2d / 2.0 * shape * window;
    out.g = d.tau * out.e1 / (e2d - 1.0);
    return out;
}

TeoMatrix appendix_teo(const Background& bg, const Mode& k, Chirality ch, double t_A, double t,
                       const AppendixOptions& opts, AsymptoticTerms* info) {
    const Mode keff = effective_mode(k, ch);
    if (keff.k3 == 0.0) throw std::domain_error("appendix_teo: needs k3 != 0");
    const double delta = derived_delta(bg);
    if (!(delta > 0.0 && delta < 1.0 / 3.0))
        throw std::domain_error("appendix_teo: needs 0 < delta < 1/3");

    LooseScalars d = loose_scalars(bg, keff, t_A, t);
    AsymptoticTerms terms = asymptotic_terms(bg, keff, t_A, t, opts.tau_min);
    if (info != nullptr) *info = terms;

    TeoMatrix out;
    out.t_A = t_A;
    out.t = t;
    out.method = Method::appendix_asymptotic;

    const double d2 = [&] {
        const double dd = approx_constants(delta).d;
        return dd * dd;
    }();
    const double dcorr = approx_constants(delta).d;
    const cplx w2 = 1.0 + d2 * terms.e2;
    const double r = d.sigma_A;  // tau_A/tau
    const double rd = std::pow(r, delta);
    const double e1d = std::exp(1.0 - delta);
    const double shape2 = d.eta / (2.0 * delta) * std::pow(bg.mu / 2.0, 2.0 * delta - 2.0) *
                          d2 * std::pow(std::abs(d.tau), 2.0 * delta - 2.0);

    auto F = [&](cplx z) { return kummer_ratio(delta, z); };

    // off-diagonal entry: oscillatory window term plus the two secular terms
    const cplx osc = std::exp(kI * d.tau * (1.0 + d2 * terms.e1)) / delta *
                     (F(-kI * d.tau * w2) - rd * F(-kI * d.tau_A * w2));
    const cplx sec1 = e1d * shape2 * (F(delta - 1.0) - rd * F((delta - 1.0) * r));
    const cplx sec2 = e1d * e1d * shape2 * std::exp(kI * d.tau) *
                      (F(2.0 * (delta - 1.0) - kI * d.tau) -
                       rd * F(2.0 * (delta - 1.0) - kI * d.tau_A));
    // kappa-free prefactor: (k_plus/kappa) sqrt(2 eta) = k_plus/|k3|^delta
    const cplx pref = d.k_plus / (bg.mu * std::pow(std::abs(keff.k3), delta)) *
                      std::pow(bg.mu / 2.0, delta) * std::pow(std::abs(d.tau), delta) *
                      std::exp(-kI * d.tau);
    out.k12 = pref * (osc + sec1 + sec2);

    // diagonal entry
    const cplx g = terms.g;
    const cplx diag1 = e1d / delta * (1.0 - kI * d2 * g) *
                       (F(delta - 1.0) - rd * F((delta - 1.0) * r));
    const cplx diag2 = kI * std::pow(e1d, 3) / delta * d2 * g *
                       (F(3.0 * (delta - 1.0)) - rd * F(3.0 * (delta - 1.0) * r));
    const cplx diag3 = std::exp(-kI * d.tau * (1.0 + d2 * terms.e1)) / delta *
                       (F(kI * d.tau * w2) - rd * F(kI * d.tau_A * w2));
    out.k11 = 1.0 + 2.0 * kI * (1.0 - delta) * dcorr * g * (diag1 + diag2 - diag3);
    return out;
}

WeakAnisotropyScalars weak_scalars(const Background& bg, const Mode& k, double t_A, double t) {
    const double delta = derived_delta(bg);
    const double eps = 1.0 - delta;
    if (!(eps > 0.0 && eps <= 0.1))
        throw std::domain_error("weak_scalars: needs 0 < 1 - delta <= 0.1");
    if (!(t_A > 0.0)) throw std::domain_error("weak_scalars: needs t_A > 0");
    LooseScalars d = loose_scalars(bg, k, t_A, t);
    if (k.k3 == 0.0) throw std::domain_error("weak_scalars: needs k3 != 0");

    WeakAnisotropyScalars w;
    w.eps = eps;
    w.a_k = d.kappa / std::abs(k.k3) * std::pow(d.s, -eps);
    const double dcorr = approx_constants(delta).d;
    const double da2 = dcorr * dcorr * w.a_k * w.a_k;
    const double root = std::sqrt(1.0 + da2);
    w.y_k = d.tau / 2.0 * da2 / (root + 1.0);
    w.q_plus = (root + 1.0) / root;
    w.q_minus = (root - 1.0) / root;
    w.script_e = std::expm1(2.0 * eps * (1.0 - d.sigma_A));
    w.script_s = 1.0 - w.script_e / (2.0 * eps);
    return w;
}

namespace {

// Shared bracket of the eps-order correction to the first window integral;
// log_s carries the branch (real logarithm, or the continued one past the
// branch point).
cplx i1_correction_bracket(double S, double y, cplx log_s) {
    const cplx eisy = std::exp(-kI * S * y);
    const cplx eiy = std::exp(-kI * y);
    const EntireSiCi a = entire_si_ci(S * y);
    const EntireSiCi b = entire_si_ci(y);
    return -(1.0 - S + log_s) * eisy + log_s + (eisy - eiy) / (kI * y) +
           cplx(a.ci_tilde, -a.si) - cplx(b.ci_tilde, -b.si);
}

// Same bracket with the trigonometric integrals replaced by their
// superasymptotic tails (valid once |S y| and |y| are both large); the
// standalone continued logarithm cancels against the tails' logarithms.
cplx i1_tail_bracket(double S, double y, cplx log_s) {
    const cplx eisy = std::exp(-kI * S * y);
    const cplx eiy = std::exp(-kI * y);
    return -(1.0 - S + log_s) * eisy + (eisy - eiy) / (kI * y) + superasym_tail(S * y) -
           superasym_tail(y);
}

cplx continued_log(double S, double y) {
    // Continuation around the branch point picks up -i pi sign(y); the cut
    // sits just on the other side of the negative real axis.
    const double cut = y > 0.0 ? -kPi - 0.25 : -kPi + 0.25;
    return specfun::principal_log_cut(cplx(S, 0.0), cut);
}

}  // namespace

TeoMatrix weak_anisotropy_teo(const Background& bg, const Mode& k, Chirality ch, double t_A,
                              double t, const WeakOptions& opts) {
    const Mode keff = effective_mode(k, ch);
    const WeakAnisotropyScalars w = weak_scalars(bg, keff, t_A, t);
    const LooseScalars d = loose_scalars(bg, keff, t_A, t);
    const double eps = w.eps;

    TeoMatrix out;
    out.t_A = t_A;
    out.t = t;
    out.method = Method::weak_anisotropy;
    if (d.kappa == 0.0) return out;  // vanishing generator in the rotated frame

    const double upper = 1.0 - d.sigma_A;
    if (upper <= 0.0) return out;
    const double y = w.y_k;
    const double dcorr = approx_constants(1.0 - eps).d;

    auto window_phase = [&](double z) {
        return std::expm1(2.0 * eps * z) / (2.0 * eps) * y;
    };
    auto i1_quad = [&] {
        return quad::gauss_kronrod(
                   [&](double z) {
                       return std::pow(1.0 - z, -eps) *
                              std::exp(cplx(eps * z, window_phase(z)));
                   },
                   0.0, upper, opts.quad_rel_tol, opts.quad_abs_tol)
            .value;
    };

    cplx i1, i2;
    if (opts.method == WeakMethod::quadrature) {
        i1 = i1_quad();
        i2 = quad::gauss_kronrod(
                 [&](double z) {
                     return std::pow(1.0 - z, -eps) *
                            std::exp(cplx(0.0, -d.tau * z - window_phase(z)));
                 },
                 0.0, upper, opts.quad_rel_tol, opts.quad_abs_tol)
                 .value;
    } else {
        // first integral: trigonometric-integral series, its continuation,
        // or the superasymptotic form, by the position relative to the
        // branch point of the continued logarithm
        const double S = w.script_s;
        const double s_branch = d.s_A / (1.0 - std::log1p(2.0 * eps) / (2.0 * eps));
        const double rho = opts.branch_radius_factor * eps;
        const cplx base = (std::exp(kI * (1.0 - S) * y) - 1.0) / (kI * y);
        if (std::abs(d.s - s_branch) < rho) {
            i1 = i1_quad();
        } else if (S > 0.0) {
            i1 = base + eps * std::exp(kI * y) / (kI * y) *
                            i1_correction_bracket(S, y, std::log(S));
        } else {
            const cplx log_s = continued_log(S, y);
            const double scale = std::min(std::abs(S * y), std::abs(y));
            const cplx bracket = scale >= 40.0 ? i1_tail_bracket(S, y, log_s)
                                               : i1_correction_bracket(S, y, log_s);
            i1 = base + eps * std::exp(kI * y) / (kI * y) * bracket;
        }
        // second integral: Kummer-factor form (needs |tau| >> 1)
        const cplx amp = d.tau + y;  // tau [1 + d^2 a^2 / (2 (root + 1))]
        const double sig = d.sigma_A;
        const cplx f_full = kummer_ratio(1.0 - eps, kI * amp);
        const cplx f_part = sig == 0.0 ? cplx(0.0) : kummer_ratio(1.0 - eps, kI * amp * sig);
        i2 = std::exp(-kI * amp) / (1.0 - eps) *
             (f_full - std::pow(sig, 1.0 - eps) * f_part);
    }

    out.k11 = 1.0 + w.q_plus * (kI * y / (2.0 * dcorr)) * (i1 - i2);
    out.k12 = d.k_plus / (2.0 * bg.mu) * std::pow(d.s, 1.0 - eps) * std::exp(-kI * d.tau) *
              (w.q_minus * std::conj(i1) + w.q_plus * std::conj(i2));
    return out;
}

models::ModelSolutionPair asymptotic_kasner_spinors(const Mode& k) {
    if (k.k3 == 0.0) throw std::domain_error("asymptotic_kasner_spinors: needs k3 != 0");
    const double delta = 0.25;
    const double mu = 4.0 / 3.0;
    const double sgn = k.k3 < 0.0 ? -1.0 : 1.0;
    const double kappa2 = k.k1 * k.k1 + k.k2 * k.k2;
    const double eta = kappa2 / (2.0 * std::sqrt(std::abs(k.k3)));
    const cplx kp(k.k2, k.k1);

    const cplx a1 = kI * sgn * std::pow(mu / 2.0, delta - 1.0) * kp /
                    (2.0 * std::pow(std::abs(k.k3), delta));
    const double f11 =
        specfun::kummer_1f1(cplx(1.0), cplx(1.0 + delta), cplx(1.0 - delta)).real();
    const double drift_coef = 0.5 * std::pow(mu / 2.0, 2.0 * delta - 2.0) *
                              approx_constants(delta).d * (f11 / delta) * eta;
    const double k3 = k.k3;

    models::ModelSolutionPair out;
    out.model = models::ModelKind::kasner_asymptotic;
    out.phi_a = [=](double t) {
        const double tau = 2.0 * k3 * std::pow(t, mu) / mu;
        const double at = std::abs(tau);
        WeylModeState st;
        st.phi1 = a1 * std::exp(-kI * tau) * std::pow(at, delta - 1.0);
        st.phi2 = 1.0 - kI * sgn * drift_coef * std::pow(at, 2.0 * delta - 1.0);
        return st;
    };
    out.phi_b = [=](double t) {
        const double tau = 2.0 * k3 * std::pow(t, mu) / mu;
        const double at = std::abs(tau);
        WeylModeState st;
        st.phi1 = 1.0 + kI * sgn * drift_coef * std::pow(at, 2.0 * delta - 1.0);
        st.phi2 = -std::conj(a1) * std::exp(kI * tau) * std::pow(at, delta - 1.0);
        return st;
    };
    return out;
}

}  // namespace bteo::asym
