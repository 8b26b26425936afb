#pragma once

#include "bteo/background.hpp"
#include "bteo/exact_models.hpp"
#include "bteo/oracle.hpp"

namespace bteo::asym {

// Window-correction coefficients of the large-|tau| expansion (0 < delta < 1/3):
//   e1 = ((e^{2(1-delta)}-1)/(4(1-delta))) eta (mu/2)^{2 delta-2} |tau|^{2 delta-2} / (1 - i(1-delta)/tau)
//   e2 = (e^{2(1-delta)}/2)               eta (mu/2)^{2 delta-2} |tau|^{2 delta-2} / (1 - i(1-delta)/tau)
//   g  = tau e1 / (e^{2(1-delta)} - 1)
// e1/e2 = (e^{2(1-delta)}-1)/(2 (1-delta) e^{2(1-delta)}) identically.
struct AsymptoticTerms {
    cplx e1;
    cplx e2;
    cplx g;
    int truncation_order = 1;   // first dropped order in eta*|tau|^(2 delta-1)
    bool tau_large_ok = true;   // |tau| >= tau_min
    bool delta_range_ok = true; // 0 < delta < 1/3
};

AsymptoticTerms asymptotic_terms(const Background& bg, const Mode& k, double t_A, double t,
                                 double tau_min = 20.0);

struct AppendixOptions {
    double tau_min = 20.0;
};

// Large-|tau| evolution operator for 0 < delta < 1/3, k3 != 0.  The Kummer
// factors at arguments O(|tau|) are evaluated through the compound
// series/asymptotic split.  delta >= 1/3 is refused; |tau| < tau_min only
// raises the tau_large_ok flag in *info.
TeoMatrix appendix_teo(const Background& bg, const Mode& k, Chirality ch, double t_A, double t,
                       const AppendixOptions& opts = {}, AsymptoticTerms* info = nullptr);

// Scalars of the nearly-conformal expansion delta = 1 - eps:
//   a_k = (kappa/|k3|) s^{-eps}          transverse-to-longitudinal ratio
//   y_k = (tau/2) d^2 a^2/(sqrt(1+d^2 a^2)+1)   beat-phase scale
//   q_plus/q_minus = (sqrt(1+d^2 a^2) +- 1)/sqrt(1+d^2 a^2)
//   script_e = e^{2 eps (1-sigma_A)} - 1,  script_s = 1 - script_e/(2 eps)
// q_plus + q_minus = 2 and q_plus*q_minus = d^2 a^2/(1+d^2 a^2).
struct WeakAnisotropyScalars {
    double eps = 0.0;
    double a_k = 0.0;
    double y_k = 0.0;
    double q_plus = 0.0;
    double q_minus = 0.0;
    double script_e = 0.0;
    double script_s = 0.0;
};

WeakAnisotropyScalars weak_scalars(const Background& bg, const Mode& k, double t_A, double t);

enum class WeakMethod {
    quadrature,  // direct adaptive quadrature of both window integrals
    series,      // eps-expansion: sine/cosine-integral series, continued past
                 // the branch point, asymptotic beyond it
};

struct WeakOptions {
    WeakMethod method = WeakMethod::quadrature;
    double branch_radius_factor = 0.1;  // semicircle radius rho = factor*eps
    double quad_rel_tol = 1e-12;
    double quad_abs_tol = 1e-15;
};

// Nearly-conformal evolution operator, 0 < eps <= 0.1 and sigma_A > 0:
//   k11 = 1 + q_plus (i y/(2 d)) [I1 - I2]
//   k12 = (k_plus/(2 mu)) s^{1-eps} e^{-i tau} [q_minus conj(I1) + q_plus conj(I2)]
// with window integrals I1, I2 over kernels (1-z)^{-eps} e^{eps z + iY} and
// (1-z)^{-eps} e^{-i tau z - iY}.  In series mode, I1 switches between the
// sine/cosine-integral series (script_s well above zero), the continued form
// with the cut logarithm (past the branch point), and the superasymptotic
// tail sum; within rho of the branch point it falls back to quadrature.
// I2 in series mode uses the Kummer-factor form, which needs |tau| >> 1.
TeoMatrix weak_anisotropy_teo(const Background& bg, const Mode& k, Chirality ch, double t_A,
                              double t, const WeakOptions& opts = {});

// Late-time spinor pair on the delta = 1/4 background from lowest-order
// initial data, normalized to phi_2(0) = 1 (solution 1) and phi_1(0) = 1
// (solution 2):
//   phi_1 of solution 1 ~ a1 e^{-i tau}/|tau|^{3/4},  phi_2 -> 1 - drift,
// a1 = i sign(k3) (mu/2)^{-3/4} k_plus/(2 |k3|^{1/4}), solution 2 mirrored
// with conj(-a1) and +drift.
models::ModelSolutionPair asymptotic_kasner_spinors(const Mode& k);

}  // namespace bteo::asym
