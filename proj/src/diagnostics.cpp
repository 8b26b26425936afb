#include "bteo/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bteo::diag {

double unitarity_defect(const TeoMatrix& K) {
    return std::norm(K.k11) + std::norm(K.k12) - 1.0;
}

cplx mode_inner_product(const WeylModeState& a, const WeylModeState& b) {
    return std::conj(a.phi1) * b.phi1 + std::conj(a.phi2) * b.phi2;
}

WeylModeState orthogonality_partner(const WeylModeState& phi) {
    return {std::conj(phi.phi2), -std::conj(phi.phi1)};
}

double group_law_residual(const TeoMatrix& whole, const TeoMatrix& later,
                          const TeoMatrix& earlier) {
    const TeoMatrix composed = later.compose_after(earlier);
    return std::sqrt(std::norm(whole.k11 - composed.k11) +
                     std::norm(whole.k12 - composed.k12));
}

double dirac_product_defect(const teo::DiracTeo& dk, const TeoMatrix& weyl,
                            const Background& bg) {
    const double lhs = dk.scale * dk.scale * (std::norm(dk.m11) + std::norm(dk.m12));
    const double ratio = std::sqrt(metric_det_abs(bg, dk.t_A) / metric_det_abs(bg, dk.t));
    const double rhs = ratio * (std::norm(weyl.k11) + std::norm(weyl.k12));
    return std::abs(lhs - rhs);
}

namespace {

double rel_entry_error(cplx a, cplx b) {
    const double denom = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / denom;
}

}  // namespace

ComparisonReport compare(const std::vector<TeoMatrix>& a, const std::vector<TeoMatrix>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare: sample lists differ in length");
    ComparisonReport rep;
    rep.samples = static_cast<int>(a.size());
    if (a.empty()) return rep;
    rep.method_a = a.front().method;
    rep.method_b = b.front().method;
    for (std::size_t i = 0; i < a.size(); ++i) {
        rep.max_abs_error = std::max({rep.max_abs_error, std::abs(a[i].k11 - b[i].k11),
                                      std::abs(a[i].k12 - b[i].k12)});
        rep.rel_error_k11 = std::max(rep.rel_error_k11, rel_entry_error(a[i].k11, b[i].k11));
        rep.rel_error_k12 = std::max(rep.rel_error_k12, rel_entry_error(a[i].k12, b[i].k12));
        rep.frobenius_error =
            std::max(rep.frobenius_error, std::sqrt(std::norm(a[i].k11 - b[i].k11) +
                                                    std::norm(a[i].k12 - b[i].k12)));
        rep.unitarity_defect_a = std::max(rep.unitarity_defect_a,
                                          std::abs(unitarity_defect(a[i])));
        rep.unitarity_defect_b = std::max(rep.unitarity_defect_b,
                                          std::abs(unitarity_defect(b[i])));
    }
    return rep;
}

ComparisonReport compare(const TeoMatrix& a, const TeoMatrix& b) {
    return compare(std::vector<TeoMatrix>{a}, std::vector<TeoMatrix>{b});
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 8)
        throw std::invalid_argument("fit_power_law: needs at least 8 samples");
    const std::size_t n = samples.size();
    double sx = 0.0, sy = 0.0;
    for (const auto& [t, m] : samples) {
        if (!(t > 0.0) || !(m > 0.0))
            throw std::invalid_argument("fit_power_law: samples must be positive");
        sx += std::log(t);
        sy += std::log(m);
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [t, m] : samples) {
        const double dx = std::log(t) - mx, dy = std::log(m) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0.0) throw std::invalid_argument("fit_power_law: degenerate abscissae");
    PowerLawFit fit;
    fit.exponent = sxy / sxx;
    // ordinate variance at the rounding level of the log values counts as a
    // perfect fit (otherwise constant data reports r^2 ~ 0 on pure noise)
    const double noise_floor = n * std::pow(1e-14 * (1.0 + std::abs(my)), 2);
    const double ss_res = syy - sxy * sxy / sxx;
    fit.r_squared = syy > noise_floor ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

}  // namespace bteo::diag
