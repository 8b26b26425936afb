#include "bteo/background.hpp"

#include <cmath>
#include <stdexcept>

#include "bteo/specfun.hpp"

namespace bteo {

double derived_delta(const Background& bg) {
    if (!(bg.mu > 0.0)) throw std::domain_error("background: needs mu > 0");
    return (1.0 - bg.nu) / bg.mu;
}

double scale_s(const Background& bg, double t) {
    if (!(t > 0.0)) throw std::domain_error("background: needs t > 0");
    return std::pow(t, bg.mu);
}

std::array<double, 3> physical_momentum(const Background& bg, const Mode& k, double t) {
    double transverse = std::pow(t, -bg.nu);
    return {k.k1 * transverse, k.k2 * transverse, k.k3 * std::pow(t, bg.mu - 1.0)};
}

double metric_det_abs(const Background& bg, double t) {
    return std::pow(t, 2.0 * (2.0 * bg.nu + 1.0 - bg.mu));
}

DerivedScalars derive_scalars(const Background& bg, const Mode& k, double t_A, double t) {
    if (!(t_A > 0.0) || !(t > 0.0))
        throw std::domain_error("derive_scalars: needs 0 < t_A and 0 < t");
    DerivedScalars d;
    d.delta = derived_delta(bg);
    d.s = scale_s(bg, t);
    d.s_A = scale_s(bg, t_A);
    d.sigma_A = d.s_A / d.s;
    d.tau = 2.0 * k.k3 * d.s / bg.mu;
    d.tau_A = 2.0 * k.k3 * d.s_A / bg.mu;
    d.kappa = std::hypot(k.k1, k.k2);
    d.ktot = std::hypot(d.kappa, k.k3);
    if (k.k3 != 0.0)
        d.eta = d.kappa * d.kappa / (2.0 * std::pow(std::abs(k.k3), 2.0 * d.delta));
    if (d.delta < 1.0) {
        d.x = d.kappa * std::pow(d.s, d.delta) / (bg.mu * (1.0 - d.delta));
        d.lambda = cplx(0.5, d.tau / (2.0 * (1.0 - d.delta)));
    }
    double phase = bg.t_ref == 0.0 ? 0.0 : 2.0 * k.k3 * std::pow(bg.t_ref, bg.mu) / bg.mu;
    d.k_plus = cplx(k.k2, k.k1) * std::exp(cplx(0.0, phase));
    return d;
}

ApproxConstants approx_constants(double delta) {
    if (!(delta > 0.0) || !(delta < 1.0))
        throw std::domain_error("approx_constants: needs 0 < delta < 1");
    ApproxConstants c;
    double e = 1.0 - delta;
    c.d1 = (e / delta) / std::expm1(e);
    cplx m = specfun::kummer_1f1(cplx(1.0, 0.0), cplx(1.0 + delta, 0.0), cplx(e, 0.0));
    c.d2 = 2.0 * m.real() / (std::exp(e) + 1.0);
    c.d = c.d1 * c.d2;
    c.in_uniform_regime = delta < 1.0 / 3.0;
    return c;
}

}  // namespace bteo
