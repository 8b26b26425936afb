#pragma once

#include <utility>
#include <vector>

#include "bteo/background.hpp"
#include "bteo/oracle.hpp"
#include "bteo/teo_core.hpp"

namespace bteo::diag {

// |k11|^2 + |k12|^2 - 1.  Zero for an exactly unitary operator.
double unitarity_defect(const TeoMatrix& K);

// Hermitean mode inner product sum_J conj(a_J) b_J.
cplx mode_inner_product(const WeylModeState& a, const WeylModeState& b);

// (conj(phi2), -conj(phi1)): a second solution orthogonal to phi whenever
// phi solves the mode system; applying it twice gives -phi.
WeylModeState orthogonality_partner(const WeylModeState& phi);

// Residual of the composition law K(c|a) = K(c|b) K(b|a) in the Frobenius
// norm, measured on the 2x2 matrices.
double group_law_residual(const TeoMatrix& whole, const TeoMatrix& later, const TeoMatrix& earlier);

// Consistency of the four-spinor operator with its generating Weyl operator:
// | scale^2 (|m11|^2+|m12|^2) - sqrt(|g(t_A)|/|g(t)|) (|k11|^2+|k12|^2) |.
// Identically zero in exact arithmetic because the phase conjugation is
// unimodular.
double dirac_product_defect(const teo::DiracTeo& dk, const TeoMatrix& weyl, const Background& bg);

struct ComparisonReport {
    Method method_a = Method::oracle;
    Method method_b = Method::oracle;
    double max_abs_error = 0.0;      // entrywise, over all samples
    double rel_error_k11 = 0.0;      // max over samples
    double rel_error_k12 = 0.0;
    double frobenius_error = 0.0;    // max over samples
    double unitarity_defect_a = 0.0; // max |defect| over samples
    double unitarity_defect_b = 0.0;
    int samples = 0;
};

// Entrywise and Frobenius comparison over paired samples.  Relative errors
// use max(|entry|, 1e-300) denominators.
ComparisonReport compare(const std::vector<TeoMatrix>& a, const std::vector<TeoMatrix>& b);
ComparisonReport compare(const TeoMatrix& a, const TeoMatrix& b);

struct PowerLawFit {
    double exponent = 0.0;
    double r_squared = 0.0;
};

// Least-squares slope of log(magnitude) against log(t).  Needs >= 8 samples
// with positive abscissae and magnitudes; throws otherwise.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& samples);

}  // namespace bteo::diag
