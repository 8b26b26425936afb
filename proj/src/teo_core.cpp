#include "bteo/teo_core.hpp"

#include <cmath>
#include <stdexcept>

#include "bteo/quadrature.hpp"
#include "bteo/specfun.hpp"

namespace bteo::teo {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

Mode effective_mode(const Mode& k, Chirality ch) {
    return ch == Chirality::negative ? k : k.flipped();
}

// derive_scalars with the integrable t_A = 0 endpoint admitted
DerivedScalars scalars_from(const Background& bg, const Mode& k, double t_A, double t) {
    DerivedScalars d = derive_scalars(bg, k, t_A > 0.0 ? t_A : t, t);
    if (t_A == 0.0) {
        d.s_A = 0.0;
        d.sigma_A = 0.0;
        d.tau_A = 0.0;
    }
    return d;
}

// Gamma-free Bessel core: h_v(w) = Gamma(v+1) (w/2)^(-v) J_v(w) = 0F1(;v+1;-w^2/4).
// The closed-form kernels combine only ratios in which the Gamma prefactors
// cancel, so everything stays bounded even for large |Im lambda|.
cplx h_fn(cplx order_plus_one, double w) {
    return specfun::hyp0f1(order_plus_one, cplx(-0.25 * w * w, 0.0));
}

struct KernelContext {
    double xd = 0.0;       // d-corrected x
    double one_minus_delta = 0.0;
    double tau = 0.0;
    cplx lambda;
    cplx g_plus;   // h_{lambda}(xd)
    cplx g_minus;  // h_{-lambda}(xd)

    // V and U at inner variable z
    std::pair<cplx, cplx> eval(double z) const {
        double big_x = xd * std::exp(one_minus_delta * z);
        cplx f_plus = h_fn(1.0 + lambda, big_x);
        cplx f_minus = h_fn(1.0 - lambda, big_x);
        double grow = std::exp(one_minus_delta * z);
        cplx osc = std::exp(cplx(0.0, -tau * z));
        cplx v = cplx(0.0, 1.0) * (xd / (2.0 * lambda)) *
                 (grow * g_minus * f_plus - osc * g_plus * f_minus);
        cplx u = std::conj(osc) * g_minus * std::conj(f_minus) +
                 (xd * xd / (4.0 * std::norm(lambda))) * grow * g_plus * std::conj(f_plus);
        return {v, u};
    }
};

}  // namespace

RZ rz_functions(double zvar, const Background& bg, const Mode& k, double t_A, double t,
                bool d_correction) {
    auto d = derive_scalars(bg, k, t_A, t);
    if (!(d.delta > 0.0) || !(d.delta < 1.0))
        throw std::domain_error("rz_functions: needs 0 < delta < 1");
    if (d.kappa == 0.0) throw std::domain_error("rz_functions: needs kappa > 0");
    double xd = (d_correction ? approx_constants(d.delta).d : 1.0) * d.x;
    double big_x = xd * std::exp((1.0 - d.delta) * zvar);
    cplx l = d.lambda;
    cplx a_minus = specfun::bessel_j(-l, cplx(xd, 0.0));
    cplx a_plus = specfun::bessel_j(l, cplx(xd, 0.0));
    cplx b_minus = specfun::bessel_j(-l, cplx(big_x, 0.0));
    cplx b_plus = specfun::bessel_j(l, cplx(big_x, 0.0));
    RZ out;
    out.r = a_minus * b_plus - a_plus * b_minus;
    // for real arguments J_{v*}(w) = conj(J_v(w))
    out.z = a_minus * std::conj(b_minus) + a_plus * std::conj(b_plus);
    out.z0 = std::norm(a_minus) + std::norm(a_plus);
    double y = d.tau / (2.0 * (1.0 - d.delta));
    double closed = 2.0 * std::cosh(kPi * y) / (kPi * xd);
    out.z0_closed_dev = std::abs(out.z0 - closed) / closed;
    return out;
}

TeoMatrix closed_form_teo(const Background& bg, const Mode& k, Chirality ch, double t_A,
                          double t, const ClosedFormOptions& opts) {
    Mode keff = effective_mode(k, ch);
    auto d = scalars_from(bg, keff, t_A, t);
    TeoMatrix out;
    out.t_A = t_A;
    out.t = t;
    out.method = Method::closed_form;
    if (d.kappa == 0.0) return out;  // vanishing generator in this representation
    if (keff.k3 == 0.0)
        throw std::domain_error(
            "closed_form_teo: k3 = 0 is outside the derivation; use the "
            "transverse model");
    if (!(d.delta > 0.0) || std::abs(d.delta - 1.0) < 1e-12 || d.delta > 1.0)
        throw std::domain_error(
            "closed_form_teo: needs 0 < delta < 1; use conformal_exact_teo at "
            "delta = 1");

    KernelContext ctx;
    ctx.one_minus_delta = 1.0 - d.delta;
    ctx.tau = d.tau;
    ctx.lambda = d.lambda;
    ctx.xd = (opts.d_correction ? approx_constants(d.delta).d : 1.0) * d.x;
    double arg_max = ctx.xd * std::exp(ctx.one_minus_delta * (1.0 - d.sigma_A));
    if (arg_max > 60.0)
        throw std::domain_error(
            "closed_form_teo: kernel argument exceeds the series accuracy cap");
    ctx.g_plus = h_fn(1.0 + d.lambda, ctx.xd);
    ctx.g_minus = h_fn(1.0 - d.lambda, ctx.xd);

    // integrate in w = (1-z)^delta; z = 1 - w^(1/delta) keeps the endpoint
    // weight (1-z)^(delta-1) flat
    double w_lo = std::pow(d.sigma_A, d.delta);
    auto fv = [&](double w) { return ctx.eval(1.0 - std::pow(w, 1.0 / d.delta)).first; };
    auto fu = [&](double w) { return ctx.eval(1.0 - std::pow(w, 1.0 / d.delta)).second; };
    cplx iv =
        quad::gauss_kronrod(fv, w_lo, 1.0, opts.quad_rel_tol, opts.quad_abs_tol).value /
        d.delta;
    cplx iu =
        quad::gauss_kronrod(fu, w_lo, 1.0, opts.quad_rel_tol, opts.quad_abs_tol).value /
        d.delta;

    cplx pre = cplx(0.0, 1.0) * (1.0 - d.delta) * d.x;
    out.k11 = 1.0 + pre * iv;
    out.k12 = (d.k_plus / d.kappa) * (1.0 - d.delta) * d.x *
              std::exp(cplx(0.0, -d.tau)) * iu;
    return out;
}

TeoMatrix short_time_teo(const Background& bg, const Mode& k, Chirality ch, double t_A,
                         double t) {
    Mode keff = effective_mode(k, ch);
    TeoMatrix out;
    out.t_A = t_A;
    out.t = t;
    out.method = Method::short_time;
    double delta = derived_delta(bg);
    if (t_A == 0.0) {
        if (!(delta > 0.0))
            throw std::domain_error("short_time_teo: t_A = 0 needs delta > 0");
        auto d = derive_scalars(bg, keff, t, t);
        out.k12 = d.k_plus * std::pow(d.s, delta) / (bg.mu * delta);
        return out;
    }
    cplx p = oracle::omega_offdiag(bg, k, ch, t);
    out.k12 = p * (t - t_A);
    return out;
}

TeoMatrix conformal_exact_teo(const Background& bg, const Mode& k, Chirality ch,
                              double t_A, double t) {
    double delta = derived_delta(bg);
    if (std::abs(delta - 1.0) > 1e-12)
        throw std::domain_error("conformal_exact_teo: needs delta = 1 (nu = 1 - mu)");
    Mode keff = effective_mode(k, ch);
    auto d = scalars_from(bg, keff, t_A, t);
    double s_a = d.s_A;
    TeoMatrix out;
    out.t_A = t_A;
    out.t = t;
    out.method = Method::conformal;
    if (d.ktot == 0.0) return out;
    double q = d.ktot * (d.s - s_a) / bg.mu;
    cplx diag_phase = std::exp(cplx(0.0, -keff.k3 * (d.s - s_a) / bg.mu));
    out.k11 = diag_phase * (std::cos(q) + cplx(0.0, keff.k3 / d.ktot) * std::sin(q));
    out.k12 = (d.k_plus / d.ktot) * std::exp(cplx(0.0, -keff.k3 * (d.s + s_a) / bg.mu)) *
              std::sin(q);
    return out;
}

std::array<cplx, 16> DiracTeo::full4() const {
    cplx z(0.0, 0.0);
    cplx a = scale * m11, b = scale * m12;
    cplx c = scale * -std::conj(m12), e = scale * std::conj(m11);
    return {a, b, z, z, c, e, z, z, z, z, a, b, z, z, c, e};
}

DiracTeo dirac_teo(const TeoMatrix& weyl, const Background& bg, const Mode& k,
                   Chirality ch) {
    DiracTeo out;
    out.chirality = ch;
    out.t_A = weyl.t_A;
    out.t = weyl.t;
    out.scale = std::pow(metric_det_abs(bg, weyl.t_A) / metric_det_abs(bg, weyl.t), 0.25);
    auto q_of = [&](double time) {
        double ref = bg.t_ref > 0.0 ? std::pow(bg.t_ref, bg.mu) : 0.0;
        return std::exp(cplx(0.0, -k.k3 * (std::pow(time, bg.mu) - ref) / bg.mu));
    };
    cplx qt = q_of(weyl.t), qa = q_of(weyl.t_A);
    if (ch == Chirality::negative) {
        out.m11 = std::conj(qt) * weyl.k11 * qa;
        out.m12 = std::conj(qt) * weyl.k12 * std::conj(qa);
    } else {
        out.m11 = qt * weyl.k11 * std::conj(qa);
        out.m12 = qt * weyl.k12 * qa;
    }
    return out;
}

}  // namespace bteo::teo
