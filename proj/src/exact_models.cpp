#include "bteo/exact_models.hpp"

#include <cmath>
#include <stdexcept>

#include "bteo/quadrature.hpp"
#include "bteo/specfun.hpp"

namespace bteo::models {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

// All solvable models below are stated with t_ref = 0, so the transverse
// momentum enters without the accumulated longitudinal phase.
cplx kp_of(const Mode& k) { return {k.k2, k.k1}; }

double kappa_of(const Mode& k) { return std::hypot(k.k1, k.k2); }

cplx recip_gamma(cplx z) { return 1.0 / specfun::gamma(z); }

}  // namespace

const char* model_name(ModelKind m) {
    switch (m) {
        case ModelKind::hypersurface: return "hypersurface";
        case ModelKind::rw: return "rw";
        case ModelKind::stiff_fluid: return "stiff_fluid";
        case ModelKind::stiff_short: return "stiff_short";
        case ModelKind::stiff_asymptotic: return "stiff_asymptotic";
        case ModelKind::kasner_short: return "kasner_short";
        case ModelKind::kasner_asymptotic: return "kasner_asymptotic";
    }
    return "unknown";
}

// --- transverse propagation, k3 == 0 ----------------------------------------

ModelSolutionPair hypersurface_solutions(const Background& bg, const Mode& k, double t_A,
                                         cplx amp_a, cplx amp_b) {
    if (k.k3 != 0.0) {
        throw std::domain_error("hypersurface_solutions: requires k3 == 0");
    }
    if (bg.nu == 1.0) {
        throw std::domain_error("hypersurface_solutions: nu == 1 has a logarithmic phase");
    }
    const double kappa = kappa_of(k);
    if (kappa == 0.0) {
        throw std::domain_error("hypersurface_solutions: null mode");
    }
    const cplx ratio = kappa / kp_of(k);  // kappa / k_plus, unit modulus
    const double p = 1.0 - bg.nu;
    const double theta0 = std::pow(t_A, p) / p;

    ModelSolutionPair out;
    out.model = ModelKind::hypersurface;
    out.phi_a = [=](double t) -> WeylModeState {
        const double th = kappa * (std::pow(t, p) / p - theta0);
        return {amp_a * std::cos(th), -amp_a * ratio * std::sin(th)};
    };
    out.phi_b = [=](double t) -> WeylModeState {
        const double th = kappa * (std::pow(t, p) / p - theta0);
        return {amp_b * std::sin(th), amp_b * ratio * std::cos(th)};
    };
    return out;
}

TeoMatrix hypersurface_teo(const Background& bg, const Mode& k, double t_A, double t,
                           bool exact_angle) {
    if (k.k3 != 0.0) {
        throw std::domain_error("hypersurface_teo: requires k3 == 0");
    }
    const double delta = derived_delta(bg);
    TeoMatrix out;
    out.t_A = t_A;
    out.t = t;
    out.method = Method::model_exact;

    const double kappa = kappa_of(k);
    if (kappa == 0.0) {
        return out;  // null generator, identity operator
    }

    double xi = 0.0;
    if (exact_angle) {
        // (kappa/(mu delta)) (s^delta - s_A^delta); mu*delta = 1 - nu.
        const double p = bg.mu * delta;
        xi = kappa * (std::pow(t, p) - std::pow(t_A, p)) / p;
    } else {
        if (delta >= 1.0) {
            throw std::domain_error("hypersurface_teo: kernel angle needs delta < 1");
        }
        const double s = scale_s(bg, t);
        const double s_A = scale_s(bg, t_A);
        const double x = kappa * std::pow(s, delta) / (bg.mu * (1.0 - delta));
        xi = x * (std::exp((1.0 - delta) * (1.0 - s_A / s)) - 1.0);
    }
    const cplx kp = kp_of(k);
    out.k11 = std::cos(xi);
    out.k12 = (kp / kappa) * std::sin(xi);
    return out;
}

// --- radiation-dominated background -----------------------------------------

TeoMatrix rw_exact_teo(const Mode& k, double t) {
    TeoMatrix out;
    out.t_A = 0.0;
    out.t = t;
    out.method = Method::model_exact;

    const double kappa = kappa_of(k);
    if (t == 0.0 || kappa == 0.0) {
        return out;  // identity: empty window, or a longitudinal mode whose
                     // rotating-frame generator vanishes
    }
    const double ktot = std::hypot(kappa, k.k3);
    const double r = std::sqrt(t);
    const cplx phase = std::exp(cplx(0.0, -2.0 * k.k3 * r));
    const double c = std::cos(2.0 * ktot * r);
    const double s = std::sin(2.0 * ktot * r);
    out.k11 = phase * (c + cplx(0.0, k.k3 / ktot) * s);
    out.k12 = (kp_of(k) / ktot) * phase * s;
    return out;
}

RwCompanions rw_companions(const Mode& k) {
    const double ktot = std::sqrt(k.k1 * k.k1 + k.k2 * k.k2 + k.k3 * k.k3);
    if (ktot == 0.0) {
        throw std::domain_error("rw_companions: null mode");
    }
    RwCompanions out;
    out.cos_zeta = std::sqrt((ktot + std::abs(k.k3)) / (2.0 * ktot));
    out.sin_zeta = std::sqrt((ktot - std::abs(k.k3)) / (2.0 * ktot));
    out.amp_ratio = out.sin_zeta / out.cos_zeta;
    return out;
}

WeylModeState rw_mode_spinor(const Mode& k, int j, double t) {
    if (j != 1 && j != 2) {
        throw std::domain_error("rw_mode_spinor: j must be 1 or 2");
    }
    if (k.k3 == 0.0 || kappa_of(k) == 0.0) {
        throw std::domain_error("rw_mode_spinor: needs k3 != 0 and kappa != 0");
    }
    const double ktot = std::sqrt(k.k1 * k.k1 + k.k2 * k.k2 + k.k3 * k.k3);
    const double sig = (j == 1 ? -1.0 : 1.0) * sgn(k.k3);
    const cplx phase = std::exp(cplx(0.0, 2.0 * sig * ktot * std::sqrt(t)));
    const cplx second = cplx(0.0, 1.0) * (sig * ktot - k.k3) / kp_of(k);
    return {phase, phase * second};
}

// --- stiff-fluid background --------------------------------------------------

ModelSolutionPair stiff_fluid_solutions(const Mode& k) {
    if (k.k3 == 0.0 || kappa_of(k) == 0.0) {
        throw std::domain_error("stiff_fluid_solutions: needs k3 != 0 and kappa != 0");
    }
    const double k3 = k.k3;
    const double kappa = kappa_of(k);
    const double eta = kappa * kappa / (2.0 * k3);  // signed
    const cplx kp = kp_of(k);
    const cplx i(0.0, 1.0);
    const cplx sqrt_m2ik3 = std::sqrt(cplx(0.0, -2.0 * k3));
    const cplx sqrt_p2ik3 = std::sqrt(cplx(0.0, 2.0 * k3));

    ModelSolutionPair out;
    out.model = ModelKind::stiff_fluid;
    out.phi_a = [=](double t) -> WeylModeState {
        const cplx zp(0.0, 2.0 * k3 * t);   // +2i k3 t
        const cplx zm = -zp;                // -2i k3 t
        const cplx w0 = specfun::whittaker_w(cplx(-0.25, -eta), 0.25, zp);
        const cplx w1 = specfun::whittaker_w(cplx(0.75, -eta), 0.25, zp);
        const cplx rot = std::exp(cplx(0.0, -k3 * t));
        const cplx phi1 = std::pow(zm, -0.25) * rot * w0;
        const cplx phi2 =
            (sqrt_m2ik3 / kp) * std::pow(zm, -0.75) * std::conj(rot) * (i * eta * w0 - w1);
        return {phi1, phi2};
    };
    out.phi_b = [=](double t) -> WeylModeState {
        const cplx zm(0.0, -2.0 * k3 * t);
        const cplx v0 = specfun::whittaker_w(cplx(0.25, eta), 0.25, zm);
        const cplx v1 = specfun::whittaker_w(cplx(-0.75, eta), 0.25, zm);
        const cplx rot = std::exp(cplx(0.0, -k3 * t));
        const cplx phi1 = std::pow(zm, -0.25) * rot * v0;
        const cplx phi2 = i * (std::conj(kp) * sgn(k3) / sqrt_p2ik3) * std::pow(zm, -0.75) *
                          std::conj(rot) * (v0 + (i * eta - 0.5) * v1);
        return {phi1, phi2};
    };
    return out;
}

ModelSolutionPair stiff_short_time(const Mode& k) {
    if (k.k3 == 0.0 || kappa_of(k) == 0.0) {
        throw std::domain_error("stiff_short_time: needs k3 != 0 and kappa != 0");
    }
    const double k3 = k.k3;
    const double kappa = kappa_of(k);
    const double eta = kappa * kappa / (2.0 * k3);
    const cplx kp = kp_of(k);
    const cplx i(0.0, 1.0);
    const double rt_pi = std::sqrt(kPi);
    const cplx sqrt_p2ik3 = std::sqrt(cplx(0.0, 2.0 * k3));

    // Reciprocal-Gamma coefficients of the two leading orders.
    const cplx a0 = recip_gamma(cplx(1.0, eta));
    const cplx a1 = recip_gamma(cplx(0.5, eta));
    const cplx a2 = recip_gamma(cplx(0.0, eta));
    const cplx b0 = recip_gamma(cplx(0.5, -eta));
    const cplx b1 = recip_gamma(cplx(0.0, -eta));
    const cplx b2 = recip_gamma(cplx(1.0, -eta));

    const cplx pref1 = rt_pi * std::exp(i * (kPi / 4.0) * sgn(k3));

    ModelSolutionPair out;
    out.model = ModelKind::stiff_short;
    out.phi_a = [=](double t) -> WeylModeState {
        const cplx c = 2.0 * std::sqrt(cplx(0.0, 2.0 * k3 * t));
        const cplx phi1 = pref1 * (a0 - c * a1);
        const cplx phi2 = pref1 * (-sqrt_p2ik3 / kp) * (a1 - c * a2);
        return {phi1, phi2};
    };
    out.phi_b = [=](double t) -> WeylModeState {
        const cplx d = 2.0 * std::sqrt(cplx(0.0, -2.0 * k3 * t));
        const cplx phi1 = rt_pi * (b0 - d * b1);
        const cplx phi2 =
            rt_pi * i * (std::conj(kp) * sgn(k3) / sqrt_p2ik3) * b2 * (1.0 - d * b0 / b2);
        return {phi1, phi2};
    };
    return out;
}

ModelSolutionPair stiff_asymptotic(const Mode& k) {
    if (k.k3 == 0.0 || kappa_of(k) == 0.0) {
        throw std::domain_error("stiff_asymptotic: needs k3 != 0 and kappa != 0");
    }
    const double k3 = k.k3;
    const double kappa = kappa_of(k);
    const double eta = kappa * kappa / (2.0 * k3);
    const cplx kp = kp_of(k);
    const cplx i(0.0, 1.0);
    const cplx sqrt_p2ik3 = std::sqrt(cplx(0.0, 2.0 * k3));

    ModelSolutionPair out;
    out.model = ModelKind::stiff_asymptotic;
    out.phi_a = [=](double t) -> WeylModeState {
        const cplx zp(0.0, 2.0 * k3 * t);
        const cplx inv = 1.0 / (2.0 * zp);  // 1/(4i k3 t)
        const cplx pref =
            std::exp(i * (kPi / 4.0) * sgn(k3)) * std::pow(zp, cplx(0.0, -eta));
        const cplx phi1 = pref * (std::exp(-zp) / std::sqrt(zp)) *
                          (1.0 - cplx(1.0 - 2.0 * eta * eta, 3.0 * eta) * inv);
        // The bracket is the large-argument form of i*eta*W_{-1/4-i eta} -
        // W_{3/4-i eta}: its 1/t coefficient is eta^2 - i eta/2.
        const cplx phi2 =
            pref * (-sqrt_p2ik3 / kp) * (1.0 + cplx(2.0 * eta * eta, -eta) * inv);
        return {phi1, phi2};
    };
    out.phi_b = [=](double t) -> WeylModeState {
        const cplx zm(0.0, -2.0 * k3 * t);
        const cplx inv = 1.0 / (-2.0 * zm);  // 1/(4i k3 t)
        const cplx pref = std::pow(zm, cplx(0.0, eta));
        const cplx phi1 = pref * (1.0 - cplx(2.0 * eta * eta, eta) * inv);
        const cplx corr = (1.0 - i * eta) * (1.0 - 2.0 * i * eta);
        const cplx phi2 = pref * i * (std::conj(kp) * sgn(k3) / sqrt_p2ik3) *
                          (std::exp(-zm) / std::sqrt(zm)) * (1.0 + corr * inv);
        return {phi1, phi2};
    };
    return out;
}

// --- axial Kasner background -------------------------------------------------

namespace {

struct KasnerScalars {
    double k3;
    double kappa;
    cplx kp;
    cplx alpha;     // (3/2) eta_{1/4} e^{-i pi/4 sign k3}
    cplx xi_unit;   // 3 sqrt|k3| e^{+i pi/4 sign k3}, xi = xi_unit * t^{2/3}
};

KasnerScalars kasner_scalars(const Mode& k) {
    if (k.k3 == 0.0 || kappa_of(k) == 0.0) {
        throw std::domain_error("kasner model: needs k3 != 0 and kappa != 0");
    }
    KasnerScalars sc;
    sc.k3 = k.k3;
    sc.kappa = kappa_of(k);
    sc.kp = kp_of(k);
    const double eta_q = sc.kappa * sc.kappa / (2.0 * std::sqrt(std::abs(k.k3)));
    const cplx turn = std::exp(cplx(0.0, -(kPi / 4.0) * sgn(k.k3)));
    sc.alpha = 1.5 * eta_q * turn;
    sc.xi_unit = 3.0 * std::sqrt(std::abs(k.k3)) * std::conj(turn);
    return sc;
}

cplx kasner_zeta(const KasnerScalars& sc, double t) {
    return sc.kp * std::exp(cplx(0.0, -1.5 * sc.k3 * std::pow(t, 4.0 / 3.0)));
}

// sqrt(k3^2 t^2 + kappa^2 - i kappa^2 t^{-4/3} / (2 k3)), principal branch
// (the real part of the radicand is positive).
cplx kasner_u(const KasnerScalars& sc, double t) {
    const double re = sc.k3 * sc.k3 * t * t + sc.kappa * sc.kappa;
    const double im = -sc.kappa * sc.kappa * std::pow(t, -4.0 / 3.0) / (2.0 * sc.k3);
    return std::sqrt(cplx(re, im));
}

}  // namespace

ModelSolutionPair kasner_short_time(const Mode& k) {
    const KasnerScalars sc = kasner_scalars(k);

    auto first = [sc](double t) -> WeylModeState {
        const cplx xi = sc.xi_unit * std::pow(t, 2.0 / 3.0);
        const cplx beta = 3.0 * sc.kp * std::exp(-xi * xi / 6.0);
        const cplx w0 = specfun::whittaker_w(sc.alpha, 0.25, xi);
        const cplx w1 = specfun::whittaker_w(sc.alpha + 1.0, 0.25, xi);
        const cplx head = std::sqrt(beta) * std::pow(xi, -0.25);
        const cplx phi1 = head * w0;
        const cplx phi2 = head * (-2.0 * std::pow(t, -1.0 / 3.0) / beta) *
                          ((xi * xi / 6.0 - xi / 2.0 + sc.alpha + 0.25) * w0 + w1);
        return {phi1, phi2};
    };

    ModelSolutionPair out;
    out.model = ModelKind::kasner_short;
    out.phi_a = first;
    out.phi_b = [first](double t) -> WeylModeState {
        const WeylModeState a = first(t);
        return {std::conj(a.phi2), -std::conj(a.phi1)};
    };
    return out;
}

ModelSolutionPair kasner_asymptotic(const Mode& k, double t_from) {
    if (!(t_from > 0.0)) {
        throw std::domain_error("kasner_asymptotic: phase reference t_from must be positive");
    }
    const KasnerScalars sc = kasner_scalars(k);
    const double x_from = std::cbrt(t_from);

    // phi1 of the second solution: sqrt(3 zeta) e^{3i sign(k3) Integral u}.
    auto second_phi1 = [sc, x_from](double t) -> cplx {
        const double x_to = std::cbrt(t);
        const quad::QuadResult ph = quad::gauss_kronrod(
            [&sc](double x) { return kasner_u(sc, x * x * x); }, x_from, x_to, 1e-12, 1e-14);
        const cplx expo = cplx(0.0, 3.0 * sgn(sc.k3)) * ph.value;
        return std::sqrt(3.0 * kasner_zeta(sc, t)) * std::exp(expo);
    };

    ModelSolutionPair out;
    out.model = ModelKind::kasner_asymptotic;
    out.phi_a = [sc, second_phi1](double t) -> WeylModeState {
        const cplx base = std::conj(second_phi1(t));
        const cplx ratio = cplx(0.0, 1.0) *
                           (sgn(sc.k3) * std::conj(kasner_u(sc, t)) - sc.k3 * t) /
                           std::conj(kasner_zeta(sc, t));
        return {ratio * base, base};
    };
    out.phi_b = [sc, second_phi1](double t) -> WeylModeState {
        const cplx base = second_phi1(t);
        const cplx ratio =
            cplx(0.0, 1.0) * (sgn(sc.k3) * kasner_u(sc, t) - sc.k3 * t) / kasner_zeta(sc, t);
        return {base, ratio * base};
    };
    return out;
}

KasnerMatching kasner_matching(const Mode& k) {
    const KasnerScalars sc = kasner_scalars(k);
    const cplx root = std::pow(cplx(0.0, 1.5 * sc.k3), 0.25);  // (3i k3/2)^{1/4}
    const double g14 = std::tgamma(0.25);
    const double g34 = std::tgamma(0.75);

    KasnerMatching out;
    out.ratio_teo_1 = -0.75 * g14 * sc.kp / root;
    out.ratio_standard_1 =
        -(std::pow(3.0, 0.75) / std::pow(2.0, 1.25)) * (g14 / g34) * sc.kp / root;
    out.quotient_1 = std::abs(out.ratio_standard_1 / out.ratio_teo_1);

    const cplx root_c = std::conj(root);
    out.ratio_teo_2 = (4.0 / 3.0) * (1.0 / g14) * root_c / std::conj(sc.kp);
    out.ratio_standard_2 =
        (std::pow(2.0, 1.25) / std::pow(3.0, 0.75)) * (g34 / g14) * root_c / std::conj(sc.kp);
    out.quotient_2 = std::abs(out.ratio_standard_2 / out.ratio_teo_2);
    return out;
}

}  // namespace bteo::models
