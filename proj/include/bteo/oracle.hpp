#pragma once

#include <string>

#include "bteo/background.hpp"

namespace bteo {

// Provenance tag for a computed evolution operator.
enum class Method {
    oracle,
    picard,
    closed_form,
    short_time,
    conformal,
    appendix_asymptotic,
    weak_anisotropy,
    model_exact,
};

std::string method_name(Method m);

// Two-spinor value of one mode solution at a fixed time.
struct WeylModeState {
    cplx phi1;
    cplx phi2;
};

// Time evolution operator of the 2x2 mode system over [t_A, t].  The full
// matrix is [[k11, k12], [-conj(k12), conj(k11)]]; only the first row is
// stored, the second follows from the structural symmetry.
struct TeoMatrix {
    cplx k11{1.0, 0.0};
    cplx k12{0.0, 0.0};
    double t_A = 0.0;
    double t = 0.0;
    Method method = Method::oracle;

    cplx k21() const { return -std::conj(k12); }
    cplx k22() const { return std::conj(k11); }
    WeylModeState apply(const WeylModeState& v) const {
        return {k11 * v.phi1 + k12 * v.phi2, k21() * v.phi1 + k22() * v.phi2};
    }
    TeoMatrix compose_after(const TeoMatrix& earlier) const {  // this * earlier
        TeoMatrix out;
        out.k11 = k11 * earlier.k11 + k12 * earlier.k21();
        out.k12 = k11 * earlier.k12 + k12 * earlier.k22();
        out.t_A = earlier.t_A;
        out.t = t;
        out.method = method;
        return out;
    }
};

namespace oracle {

// Off-diagonal entry P(t) of the first-order generator
// Omega(t) = [[0, P], [-conj(P), 0]]:
// P = k_plus * t^(-nu) * exp(-2i*k3*t^mu/mu) for negative chirality,
// and the k -> -k image for positive chirality.
cplx omega_offdiag(const Background& bg, const Mode& k, Chirality ch, double t);

struct OracleOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_steps = 4000000;
};

// Reference integrator: embedded Dormand-Prince 5(4) with PI step control
// applied to the first column of the matrix system K' = Omega(t) K.  The
// matrix is reassembled from that column via the structural symmetry.
// t_from == 0 is admitted for nu < 1: the integrable endpoint is crossed
// with one analytic step using the leading short-window form.
TeoMatrix evolve_oracle(const Background& bg, const Mode& k, Chirality ch, double t_from,
                        double t_to, const OracleOptions& opts = {});

// Same integrator acting on a single mode solution with given initial data.
WeylModeState evolve_state(const Background& bg, const Mode& k, Chirality ch,
                           const WeylModeState& init, double t_from, double t_to,
                           const OracleOptions& opts = {});

// Iterated-integral (Picard/Dyson) approximant of the operator, order terms
// kept up to n_max <= 6.  Each iterated integral is evaluated by nested
// adaptive Gauss-Kronrod quadrature with the endpoint singularity absorbed
// by the sigma -> sigma^delta substitution.
TeoMatrix picard_teo(const Background& bg, const Mode& k, Chirality ch, double t_A, double t,
                     int n_max, double tol = 1e-10);

}  // namespace oracle
}  // namespace bteo
