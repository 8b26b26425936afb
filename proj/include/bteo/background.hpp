#pragma once

#include <array>
#include <complex>

namespace bteo {

using cplx = std::complex<double>;

// Sign of the transverse helicity block the 2x2 reduction acts on.  The
// positive-chirality problem is obtained from the negative one by flipping
// the sign of all momentum components, so most routines take the negative
// case as primary and map k -> -k internally.
enum class Chirality { negative, positive };

// Comoving momentum of a single Fourier mode.
struct Mode {
    double k1 = 0.0;
    double k2 = 0.0;
    double k3 = 0.0;

    Mode flipped() const { return {-k1, -k2, -k3}; }
};

// Axisymmetric power-law background: the two transverse directions expand
// as t^nu, the third direction as t^(1-mu).  t_ref fixes the reference time
// of the accumulated longitudinal phase (it only rotates the transverse
// momentum components by a constant phase and drops out of all moduli).
struct Background {
    double mu = 1.0;
    double nu = 0.5;
    double t_ref = 0.0;

    static Background conformal(double mu_ = 0.5, double t_ref_ = 0.0) {
        return {mu_, 1.0 - mu_, t_ref_};
    }
    static Background radiation(double t_ref_ = 0.0) { return {0.5, 0.5, t_ref_}; }
    static Background stiff_fluid(double t_ref_ = 0.0) { return {1.0, 0.5, t_ref_}; }
    static Background axial_kasner(double t_ref_ = 0.0) {
        return {4.0 / 3.0, 2.0 / 3.0, t_ref_};
    }
};

// Anisotropy exponent delta = (1 - nu)/mu.  Validates mu > 0; the closed
// forms downstream additionally need 0 < delta <= 1, which callers check.
double derived_delta(const Background& bg);

// Stretched time s(t) = t^mu.
double scale_s(const Background& bg, double t);

// Physical momentum components (k1/t^nu, k2/t^nu, k3*t^(mu-1)).
std::array<double, 3> physical_momentum(const Background& bg, const Mode& k, double t);

// |det g| = t^(2*(2*nu + 1 - mu)).
double metric_det_abs(const Background& bg, double t);

// Scalars shared by the evolution-operator formulas.  All are functions of
// the window [t_A, t] for a fixed mode and background:
//   s, s_A     stretched times, sigma_A = s_A/s
//   tau, tau_A phases 2*k3*s/mu
//   kappa      transverse momentum modulus, ktot = |k|
//   eta        kappa^2 / (2*|k3|^(2*delta))   (k3 != 0 only, else 0)
//   x          kappa*s^delta / (mu*(1-delta)) (delta < 1 only, else 0)
//   lambda     1/2 + i*tau / (2*(1-delta))    (delta < 1 only, else 0)
//   k_plus     (k2 + i*k1) * exp(+2i*k3*t_ref^mu/mu)
struct DerivedScalars {
    double delta = 0.0;
    double s = 0.0;
    double s_A = 0.0;
    double sigma_A = 0.0;
    double tau = 0.0;
    double tau_A = 0.0;
    double kappa = 0.0;
    double ktot = 0.0;
    double eta = 0.0;
    double x = 0.0;
    cplx lambda;
    cplx k_plus;
};

DerivedScalars derive_scalars(const Background& bg, const Mode& k, double t_A, double t);

// Constants of the uniform kernel approximation: d1 = ((1-delta)/delta)/(e^(1-delta)-1),
// d2 = 2*M(1;1+delta;1-delta)/(e^(1-delta)+1) with M the confluent series, d = d1*d2.
// in_uniform_regime flags delta < 1/3, where the approximation error of the
// corrected kernel stays uniformly small in the phase variable.
struct ApproxConstants {
    double d1 = 1.0;
    double d2 = 1.0;
    double d = 1.0;
    bool in_uniform_regime = false;
};

ApproxConstants approx_constants(double delta);

}  // namespace bteo
