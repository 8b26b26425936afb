#pragma once

#include <complex>
#include <functional>

namespace bteo::quad {

using cplx = std::complex<double>;

struct QuadResult {
    cplx value;
    double err_abs = 0.0;  // estimated absolute error
    int evals = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod (7/15) over [a, b] for a complex-valued integrand.
// Bisects until the per-panel Kronrod-Gauss discrepancy meets the mixed
// tolerance; max_depth bounds the recursion.
QuadResult gauss_kronrod(const std::function<cplx(double)>& f, double a, double b,
                         double rel_tol = 1e-10, double abs_tol = 1e-13,
                         int max_depth = 28);

// Real-valued convenience wrapper.
double gauss_kronrod_real(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, double abs_tol = 1e-13,
                          int max_depth = 28);

}  // namespace bteo::quad
