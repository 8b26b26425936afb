#pragma once

#include <complex>

namespace bteo::specfun {

using cplx = std::complex<double>;

// Gamma function for complex argument (Lanczos approximation, reflection
// for Re z < 0.5).  Poles at non-positive integers throw std::domain_error.
cplx gamma(cplx z);

// log Gamma, principal branch on Re z > 0 (used for ratio scaling).
cplx log_gamma(cplx z);

// Confluent limit series 0F1(; b; z) = sum_m z^m / ((b)_m m!), accumulated
// in double-double to absorb the alternating-series cancellation.
cplx hyp0f1(cplx b, cplx z);

// Bessel function of the first kind, complex order and argument, by the
// ascending series J_v(z) = (z/2)^v / Gamma(v+1) * 0F1(; v+1; -z^2/4).
// Deliberately capped at |z| <= 60: beyond that the series cancellation
// exceeds the double-double headroom.  Principal branch of (z/2)^v.
cplx bessel_j(cplx order, cplx arg);

// Kummer confluent hypergeometric 1F1(a; b; z), Taylor series with
// double-double accumulation.  Capped at |z| <= 60 for the same reason as
// bessel_j; use kummer_1f1_asymptotic beyond.
cplx kummer_1f1(cplx a, cplx b, cplx z);

// Large-|z| expansion of 1F1(a; b; z): the two-sector compound asymptotic
//   Gamma(b) [ (-z)^(-a)/Gamma(b-a) * S1(1/(-z)) + e^z z^(a-b)/Gamma(a) * S2(1/z) ],
// each series truncated at its smallest term.  Accurate on the imaginary
// axis where neither sector dominates.
cplx kummer_1f1_asymptotic(cplx a, cplx b, cplx z);

// Whittaker W function via its decomposition into the two regular Kummer
// solutions.  Requires 2*mu_idx not an integer (true for the fixed
// mu_idx = 1/4 used by the solvable backgrounds).  Series-based: |z| <= 40.
cplx whittaker_w(cplx kappa_idx, cplx mu_idx, cplx z);

struct SiCi {
    double si = 0.0;  // integral of sin(u)/u over [0, x]
    double ci = 0.0;  // Euler gamma + log(x) + integral of (cos(u)-1)/u
};

// Sine and cosine integrals for x > 0.  Power series (double-double) below
// the crossover, auxiliary-function asymptotics above.
SiCi sine_cosine_integrals(double x);

// Logarithm with the branch cut rotated onto the ray arg(z) = cut_angle:
// returns log|z| + i*phi with phi in (cut_angle, cut_angle + 2*pi].
cplx principal_log_cut(cplx z, double cut_angle);

}  // namespace bteo::specfun
