#include "bteo/oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "bteo/quadrature.hpp"

namespace bteo {

std::string method_name(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::picard: return "picard";
        case Method::closed_form: return "closed_form";
        case Method::short_time: return "short_time";
        case Method::conformal: return "conformal";
        case Method::appendix_asymptotic: return "appendix_asymptotic";
        case Method::weak_anisotropy: return "weak_anisotropy";
        case Method::model_exact: return "model_exact";
    }
    return "unknown";
}

namespace oracle {
namespace {

cplx kplus(const Background& bg, const Mode& k) {
    double phase = bg.t_ref == 0.0 ? 0.0 : 2.0 * k.k3 * std::pow(bg.t_ref, bg.mu) / bg.mu;
    return cplx(k.k2, k.k1) * std::exp(cplx(0.0, phase));
}

Mode effective_mode(const Mode& k, Chirality ch) {
    return ch == Chirality::negative ? k : k.flipped();
}

cplx offdiag(const Background& bg, const Mode& keff, double t) {
    return kplus(bg, keff) * std::pow(t, -bg.nu) *
           std::exp(cplx(0.0, -2.0 * keff.k3 * std::pow(t, bg.mu) / bg.mu));
}

using State = std::array<cplx, 2>;

State rhs(const Background& bg, const Mode& keff, double t, const State& y) {
    cplx p = offdiag(bg, keff, t);
    return {p * y[1], -std::conj(p) * y[0]};
}

// Dormand-Prince 5(4) tableau
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247,
                 A64 = 49.0 / 176, A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192,
                 B5 = -2187.0 / 6784, B6 = 11.0 / 84;
constexpr double E1 = 35.0 / 384 - 5179.0 / 57600, E3 = 500.0 / 1113 - 7571.0 / 16695,
                 E4 = 125.0 / 192 - 393.0 / 640, E5 = -2187.0 / 6784 + 92097.0 / 339200,
                 E6 = 11.0 / 84 - 187.0 / 2100, E7 = -1.0 / 40;
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;

State axpy(const State& y, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = y;
    for (const auto& [c, k] : terms) {
        out[0] += h * c * (*k)[0];
        out[1] += h * c * (*k)[1];
    }
    return out;
}

State integrate(const Background& bg, const Mode& keff, State y, double t0, double t1,
                const OracleOptions& opts) {
    if (t0 == t1) return y;
    if (!(t0 > 0.0) || !(t1 > 0.0))
        throw std::domain_error("oracle: integration endpoints must be positive");
    double dir = t1 > t0 ? 1.0 : -1.0;

    // initial step from the local oscillation/steepness scales
    double p0 = std::abs(offdiag(bg, keff, t0));
    double w0 = std::abs(2.0 * keff.k3) * std::pow(t0, bg.mu - 1.0);
    double steep = std::abs(bg.nu) / t0;
    double h = dir * std::min(0.2 / (p0 + w0 + steep + 1e-30), 0.25 * std::abs(t1 - t0));

    State k1 = rhs(bg, keff, t0, y);
    double t = t0;
    double err_prev = 1.0;
    for (long step = 0; step < opts.max_steps; ++step) {
        if ((t1 - t) * dir <= 0.0) return y;
        if ((t + h - t1) * dir > 0.0) h = t1 - t;
        if (t + h == t) throw std::runtime_error("oracle: step size underflow");

        State k2 = rhs(bg, keff, t + C2 * h, axpy(y, h, {{A21, &k1}}));
        State k3 = rhs(bg, keff, t + C3 * h, axpy(y, h, {{A31, &k1}, {A32, &k2}}));
        State k4 = rhs(bg, keff, t + C4 * h, axpy(y, h, {{A41, &k1}, {A42, &k2}, {A43, &k3}}));
        State k5 = rhs(bg, keff, t + C5 * h,
                       axpy(y, h, {{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}}));
        State k6 = rhs(bg, keff, t + h,
                       axpy(y, h, {{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}}));
        State ynew =
            axpy(y, h, {{B1, &k1}, {B3, &k3}, {B4, &k4}, {B5, &k5}, {B6, &k6}});
        State k7 = rhs(bg, keff, t + h, ynew);

        double err = 0.0;
        for (int i = 0; i < 2; ++i) {
            cplx e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] +
                          E6 * k6[i] + E7 * k7[i]);
            double sc = opts.abs_tol +
                        opts.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            double r = std::abs(e) / sc;
            err += r * r;
        }
        err = std::sqrt(0.5 * err);

        if (err <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;  // first-same-as-last
            double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2) *
                         std::pow(err_prev, 0.08);
            err_prev = std::max(err, 1e-10);
            h *= std::min(5.0, std::max(0.2, fac));
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.25));
        }
    }
    throw std::runtime_error("oracle: step budget exhausted");
}

// Crossing the integrable t = 0 endpoint: leading Picard term with the
// longitudinal phase frozen, valid until either the transverse sweep or the
// phase becomes 1e-6.  Applies K(t0|0) ~ [[1, sweep], [-conj(sweep), 1]] to y.
double analytic_start(const Background& bg, const Mode& keff, double t_to, State& y) {
    if (!(bg.nu < 1.0))
        throw std::domain_error("oracle: t_from = 0 needs nu < 1");
    double kap = std::hypot(keff.k1, keff.k2);
    double t0 = 0.5 * t_to;
    if (kap > 0.0)
        t0 = std::min(t0, std::pow(1e-6 * (1.0 - bg.nu) / kap, 1.0 / (1.0 - bg.nu)));
    if (keff.k3 != 0.0)
        t0 = std::min(t0, std::pow(1e-6 * bg.mu / (2.0 * std::abs(keff.k3)), 1.0 / bg.mu));
    cplx sweep = kplus(bg, keff) * std::pow(t0, 1.0 - bg.nu) / (1.0 - bg.nu);
    State out{y[0] + sweep * y[1], y[1] - std::conj(sweep) * y[0]};
    y = out;
    return t0;
}

}  // namespace

cplx omega_offdiag(const Background& bg, const Mode& k, Chirality ch, double t) {
    return offdiag(bg, effective_mode(k, ch), t);
}

TeoMatrix evolve_oracle(const Background& bg, const Mode& k, Chirality ch, double t_from,
                        double t_to, const OracleOptions& opts) {
    Mode keff = effective_mode(k, ch);
    TeoMatrix out;
    out.t_A = t_from;
    out.t = t_to;
    out.method = Method::oracle;
    if (keff.k1 == 0.0 && keff.k2 == 0.0 && keff.k3 == 0.0) return out;
    State y{cplx(1.0, 0.0), cplx(0.0, 0.0)};
    double t0 = t_from;
    if (t_from == 0.0) t0 = analytic_start(bg, keff, t_to, y);
    y = integrate(bg, keff, y, t0, t_to, opts);
    out.k11 = y[0];
    out.k12 = -std::conj(y[1]);
    return out;
}

WeylModeState evolve_state(const Background& bg, const Mode& k, Chirality ch,
                           const WeylModeState& init, double t_from, double t_to,
                           const OracleOptions& opts) {
    Mode keff = effective_mode(k, ch);
    State y{init.phi1, init.phi2};
    double t0 = t_from;
    if (t_from == 0.0) t0 = analytic_start(bg, keff, t_to, y);
    y = integrate(bg, keff, y, t0, t_to, opts);
    return {y[0], y[1]};
}

namespace {

// Iterated ordered integrals in the regularising variable w = t^(1-nu):
// dt t^(-nu) = dw/(1-nu), so each level's integrand is smooth down to w = 0.
// The order-n term of the expansion is purely off-diagonal for odd n and
// purely diagonal for even n, so one scalar integral per level suffices.
struct PicardContext {
    const Background* bg;
    Mode keff;
    cplx kp;
    double w_a;
    double tol;
    long budget;
    long used = 0;

    cplx phase(double w) const {
        double t_mu = std::pow(w, bg->mu / (1.0 - bg->nu));
        return std::exp(cplx(0.0, -2.0 * keff.k3 * t_mu / bg->mu));
    }

    // a_n(w) for even n, b_n(w) for odd n (the other component vanishes)
    cplx level(int n, double w) {
        if (n == 0) return {1.0, 0.0};
        if (++used > budget)
            throw std::runtime_error("picard_teo: evaluation budget exceeded");
        double scale = 1.0 / (1.0 - bg->nu);
        int depth = used == 1 ? 10 : 3;  // outermost integral may refine deeper
        double sgn = (n % 2 == 0) ? -1.0 : 1.0;  // a_n = -int p conj(b_{n-1})
        auto f = [&](double u) {
            return sgn * kp * phase(u) * scale * std::conj(level(n - 1, u));
        };
        return quad::gauss_kronrod(f, w_a, w, tol, 1e-16, depth).value;
    }
};

}  // namespace

TeoMatrix picard_teo(const Background& bg, const Mode& k, Chirality ch, double t_A,
                     double t, int n_max, double tol) {
    if (n_max < 0 || n_max > 6)
        throw std::domain_error("picard_teo: order must be within 0..6");
    if (!(bg.nu < 1.0)) throw std::domain_error("picard_teo: needs nu < 1");
    if (!(t_A >= 0.0) || !(t > 0.0))
        throw std::domain_error("picard_teo: needs t_A >= 0 and t > 0");
    Mode keff = effective_mode(k, ch);
    PicardContext ctx{&bg, keff, kplus(bg, keff), std::pow(t_A, 1.0 - bg.nu), tol,
                      2000000L};
    double w_end = std::pow(t, 1.0 - bg.nu);
    TeoMatrix out;
    out.t_A = t_A;
    out.t = t;
    out.method = Method::picard;
    cplx a_sum(1.0, 0.0), b_sum(0.0, 0.0);
    for (int n = 1; n <= n_max; ++n) {
        ctx.used = 0;
        cplx v = ctx.level(n, w_end);
        if (n % 2 == 1)
            b_sum += v;  // odd orders build the off-diagonal entry directly
        else
            a_sum += v;
    }
    out.k11 = a_sum;
    out.k12 = b_sum;
    return out;
}

}  // namespace oracle
}  // namespace bteo
