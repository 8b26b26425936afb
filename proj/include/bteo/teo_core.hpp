#pragma once

#include "bteo/background.hpp"
#include "bteo/oracle.hpp"

namespace bteo::teo {

// Bessel-product kernels of the closed-form operator at inner variable z:
//   r = J_{-l}(xd) J_{l}(Xd) - J_{l}(xd) J_{-l}(Xd)
//   zf = J_{-l}(xd) J_{-l*}(Xd) + J_{l}(xd) J_{l*}(Xd)
// with l = lambda, xd the (optionally d-corrected) x, X = xd*e^{(1-delta)z}.
// z0 is zf at z = 0; z0_closed_dev records its relative deviation from the
// closed normalization pi*xd/(2*cosh(pi*tau/(2*(1-delta)))).
struct RZ {
    cplx r;
    cplx z;
    cplx z0;
    double z0_closed_dev = 0.0;
};

RZ rz_functions(double zvar, const Background& bg, const Mode& k, double t_A, double t,
                bool d_correction = true);

struct ClosedFormOptions {
    bool d_correction = true;   // replace x by d(delta)*x inside the kernels
    double quad_rel_tol = 1e-11;
    double quad_abs_tol = 1e-14;
};

// Closed-form evolution operator for 0 < delta < 1, k3 != 0:
//   k11 = 1 + i(1-delta) x Int_0^{1-sigma_A} dz (1-z)^{delta-1} V(z)
//   k12 = (k_plus/kappa)(1-delta) x e^{-i tau} Int_0^{1-sigma_A} dz (1-z)^{delta-1} U(z)
// with U, V the normalized kernel ratios.  The quadrature runs in the
// variable w = (1-z)^delta which absorbs the endpoint singularity.
// kappa == 0 returns the identity (the generator vanishes).  delta == 1
// and k3 == 0 are refused: use conformal_exact_teo or the hypersurface
// model instead.
TeoMatrix closed_form_teo(const Background& bg, const Mode& k, Chirality ch, double t_A,
                          double t, const ClosedFormOptions& opts = {});

// Leading short-window operator.  t_A == 0: off-diagonal k_plus s^delta/(mu delta),
// diagonal 1 (error order s^(2*delta)).  t_A > 0: one-step form
// 1 + Omega(t)*(t - t_A) (error order (t-t_A)^2).
TeoMatrix short_time_teo(const Background& bg, const Mode& k, Chirality ch, double t_A,
                         double t);

// Exact operator in the conformally flat case delta == 1 (nu = 1 - mu):
//   k11 = e^{-i(k3/mu)(s-s_A)} [cos(q) + i(k3/ktot) sin(q)],
//   k12 = (k_plus/ktot) e^{-i(k3/mu)(s+s_A)} sin(q),  q = (ktot/mu)(s-s_A).
// Exactly unitary.
TeoMatrix conformal_exact_teo(const Background& bg, const Mode& k, Chirality ch, double t_A,
                              double t);

// Evolution operator of the full four-spinor field modes: the Weyl operator
// conjugated by the accumulated longitudinal phase and rescaled by the
// metric volume factor,
//   ktilde = (|g(t_A)|/|g(t)|)^{1/4} Q^{-s}(t) K Q^{s}(t_A),  s = +-1 by chirality,
// with Q = diag(q, conj q), q = exp(-i k3 (t^mu - t_ref^mu)/mu).  The 4x4
// block operator is 1_2 (x) ktilde.
struct DiracTeo {
    cplx m11;          // ktilde = scale * [[m11, m12], [-conj(m12), conj(m11)]]
    cplx m12;
    double scale = 1.0;
    Chirality chirality = Chirality::negative;
    double t_A = 0.0;
    double t = 0.0;

    std::array<cplx, 16> full4() const;  // row-major 1_2 (x) ktilde
};

DiracTeo dirac_teo(const TeoMatrix& weyl, const Background& bg, const Mode& k, Chirality ch);

}  // namespace bteo::teo
