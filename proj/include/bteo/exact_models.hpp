#pragma once

#include <functional>

#include "bteo/background.hpp"
#include "bteo/oracle.hpp"

namespace bteo::models {

enum class ModelKind {
    hypersurface,
    rw,
    stiff_fluid,
    stiff_short,
    stiff_asymptotic,
    kasner_short,
    kasner_asymptotic,
};

const char* model_name(ModelKind m);

// A pair of reference solutions of the first-order mode system, callable at
// any time in their validity window.  The two members are orthogonal under
// the mode inner product at every t.
struct ModelSolutionPair {
    ModelKind model = ModelKind::hypersurface;
    std::function<WeylModeState(double)> phi_a;  // solution 1
    std::function<WeylModeState(double)> phi_b;  // solution 2
};

// --- transverse propagation, k3 == 0 ---------------------------------------

// Exact oscillator pair for k3 = 0 and nu != 1:
//   phi_a = amp_a (cos Th, -(kappa/k_plus) sin Th),
//   phi_b = amp_b (sin Th,  (kappa/k_plus) cos Th),
// Th(t) = kappa (t^(1-nu) - t_A^(1-nu))/(1-nu).  nu == 1 (logarithmic
// frequency) is refused.
ModelSolutionPair hypersurface_solutions(const Background& bg, const Mode& k, double t_A,
                                         cplx amp_a = 1.0, cplx amp_b = 1.0);

// Rotation-form operator [[cos xi, (k_plus/kappa) sin xi], [..]] with the
// exact angle xi = (kappa/(mu delta))(s^delta - s_A^delta), or, with
// exact_angle = false, the kernel-approximation angle
// xi = x (e^{(1-delta)(1-sigma_A)} - 1).
TeoMatrix hypersurface_teo(const Background& bg, const Mode& k, double t_A, double t,
                           bool exact_angle = true);

// --- radiation-dominated background, mu = nu = 1/2, t_A = 0 ----------------

// Exact operator from t_A = 0 (a special case of the conformally flat
// family):
//   k11 = e^{-2i k3 sqrt(t)} [cos(2k sqrt(t)) + i(k3/k) sin(2k sqrt(t))]
//   k12 = (k_plus/k) e^{-2i k3 sqrt(t)} sin(2k sqrt(t)).
TeoMatrix rw_exact_teo(const Mode& k, double t);

// Mixing angle and normalization ratio of the plane-wave spinor basis built
// on the operator above: cos(zeta) = sqrt((ktot + |k3|)/(2 ktot)) and the
// first amplitude equals tan(zeta) times the second.
struct RwCompanions {
    double cos_zeta = 1.0;
    double sin_zeta = 0.0;
    double amp_ratio = 0.0;  // tan(zeta)
};

RwCompanions rw_companions(const Mode& k);

// Mode spinor of the exact plane-wave solutions at time t (j = 1, 2),
//   e^{2i(-1)^j ktot sign(k3) sqrt(t)} (1, i((-1)^j ktot sign(k3) - k3)/(k2 + i k1)),
// without the |g|^{-1/4} volume factor.
WeylModeState rw_mode_spinor(const Mode& k, int j, double t);

// --- stiff-fluid background, mu = 1, nu = 1/2 (delta = 1/2) ----------------

// Exact Whittaker-function pair.  Arguments 2i k3 t for solution 1 and
// -2i k3 t for solution 2, index shifted by the signed parameter
// eta = kappa^2/(2 k3).  Validity is bounded by the Whittaker evaluation
// window |2 k3 t| <= 40.
ModelSolutionPair stiff_fluid_solutions(const Mode& k);

// Leading short-window forms, error O(k3 t) relative.
ModelSolutionPair stiff_short_time(const Mode& k);

// Leading large-time forms, error O(1/(k3 t)^2) relative entrywise; the
// slowly rotating overall phases (+-2i k3 t)^(-+i eta) are kept.
ModelSolutionPair stiff_asymptotic(const Mode& k);

// --- axial Kasner background, mu = 4/3, nu = 2/3 (delta = 1/4) -------------

// Early-time Whittaker pair (argument xi = 3 sqrt(|k3|) e^{i pi/4 sign k3} t^{2/3});
// solution 2 is the orthogonality partner of solution 1 by construction.
ModelSolutionPair kasner_short_time(const Mode& k);

// Late-time WKB-type pair; the accumulated phase integral of
// u(t) = sqrt(k3^2 t^2 + kappa^2 - i kappa^2 t^{-4/3}/(2 k3)) runs from
// t_from > 0 and is evaluated by quadrature.
ModelSolutionPair kasner_asymptotic(const Mode& k, double t_from);

// Initial-data ratios phi_1(0)/phi_2(0) (solution 1) and the mirrored
// second-solution ratio, computed once from the evolution-operator matching
// and once from the standard asymptotic connection with the small index
// alpha dropped.  Their quotients are universal numbers:
//   quotient_1 = (8/3)^{1/4}/Gamma(3/4) = 1.042817...,  quotient_2 = 1/quotient_1.
struct KasnerMatching {
    cplx ratio_teo_1;
    cplx ratio_standard_1;
    double quotient_1 = 0.0;
    cplx ratio_teo_2;
    cplx ratio_standard_2;
    double quotient_2 = 0.0;
};

KasnerMatching kasner_matching(const Mode& k);

}  // namespace bteo::models
