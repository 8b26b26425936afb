#include "bteo/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bteo::specfun {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

// ---- double-double arithmetic ----------------------------------------------
//
// Unevaluated sums hi + lo with |lo| <= ulp(hi)/2.  Only the handful of
// operations the series accumulators need.  Error per operation is O(eps^2),
// which keeps the huge-term cancellation in the ascending series below the
// target accuracy up to |z| ~ 60 (Bessel) / |z| ~ 900 (0F1 variable).

struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {  // requires |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline dd dd_mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = dd_add(a, dd_mul(b, -q1));
    double q2 = r.hi / b.hi;
    r = dd_add(r, dd_mul(b, -q2));
    double q3 = r.hi / b.hi;
    dd q = quick_two_sum(q1, q2);
    return dd_add(q, dd{q3, 0.0});
}

struct cdd {
    dd re, im;
};

inline cdd cdd_from(cplx z) { return {dd{z.real(), 0.0}, dd{z.imag(), 0.0}}; }

inline cdd cdd_add(cdd a, cdd b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline cdd cdd_mul(cdd a, cdd b) {
    return {dd_add(dd_mul(a.re, b.re), dd_mul(dd_mul(a.im, b.im), -1.0)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline cdd cdd_mul(cdd a, cplx b) { return cdd_mul(a, cdd_from(b)); }

inline cdd cdd_div(cdd a, cdd b) {
    dd den = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    cdd num = cdd_mul(a, cdd{b.re, dd_mul(b.im, -1.0)});
    return {dd_div(num.re, den), dd_div(num.im, den)};
}

inline cplx cdd_value(cdd a) { return {a.re.hi + a.re.lo, a.im.hi + a.im.lo}; }

inline double cdd_abs(cdd a) { return std::abs(cdd_value(a)); }

// b + m as an exact double-double (m integral): the rounding of the plain sum
// would otherwise seed a relative error that the largest series term amplifies
// catastrophically.
inline cdd shift_exact(cplx b, double m) {
    return {two_sum(b.real(), m), dd{b.imag(), 0.0}};
}

bool near_nonpositive_int(cplx z, double* which = nullptr) {
    if (std::abs(z.imag()) > 1e-13) return false;
    double r = std::round(z.real());
    if (r > 0.5) return false;
    if (std::abs(z.real() - r) > 1e-13 * std::max(1.0, std::abs(r))) return false;
    if (which) *which = r;
    return true;
}

// ---- gamma (Lanczos, g = 7, 9 terms) ---------------------------------------

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
};

cplx lanczos_sum(cplx z) {  // z shifted so the series runs on z, z+1, ...
    cplx acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + cplx(i - 1, 0.0));
    return acc;
}

cplx gamma_right(cplx z) {  // Re z >= 0.5
    cplx g = z + cplx(kLanczosG - 0.5, 0.0);
    return std::sqrt(2.0 * kPi) * std::pow(g, z - 0.5) * std::exp(-g) * lanczos_sum(z);
}

}  // namespace

cplx gamma(cplx z) {
    if (near_nonpositive_int(z)) throw std::domain_error("gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return gamma_right(z);
    // reflection through sin: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * gamma_right(1.0 - z));
}

cplx log_gamma(cplx z) {
    if (z.real() <= 0.0) throw std::domain_error("log_gamma: needs Re z > 0");
    cplx g = z + cplx(kLanczosG - 0.5, 0.0);
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(g) - g +
           std::log(lanczos_sum(z));
}

namespace {

// 1/gamma with zeros (instead of pole errors) at non-positive integers;
// needed by the connection formulas where a reciprocal legitimately hits one.
cplx rgamma(cplx z) {
    if (near_nonpositive_int(z)) return 0.0;
    return 1.0 / gamma(z);
}

}  // namespace

cplx hyp0f1(cplx b, cplx z) {
    double pole;
    if (near_nonpositive_int(b, &pole))
        throw std::domain_error("hyp0f1: lower parameter at non-positive integer");
    cdd sum = cdd_from(1.0);
    cdd term = cdd_from(1.0);
    double peak = 1.0;
    for (int m = 0; m < 800; ++m) {
        cdd den = cdd_mul(shift_exact(b, m), static_cast<double>(m + 1));
        term = cdd_div(cdd_mul(term, z), den);
        sum = cdd_add(sum, term);
        double a = cdd_abs(term);
        peak = std::max(peak, a);
        if (a < 1e-35 * std::max(1.0, cdd_abs(sum)) && m > 4) return cdd_value(sum);
    }
    throw std::runtime_error("hyp0f1: series did not converge");
}

cplx bessel_j(cplx order, cplx arg) {
    if (std::abs(arg) > 60.0)
        throw std::domain_error("bessel_j: |arg| beyond the series accuracy cap (60)");
    if (arg == cplx(0.0)) return order == cplx(0.0) ? 1.0 : 0.0;
    cplx bp1 = order + 1.0;
    if (near_nonpositive_int(bp1))
        throw std::domain_error("bessel_j: negative integer order unsupported");
    cplx pre = std::exp(order * std::log(arg / 2.0)) * rgamma(bp1);
    return pre * hyp0f1(bp1, -arg * arg / 4.0);
}

cplx kummer_1f1(cplx a, cplx b, cplx z) {
    if (std::abs(z) > 60.0)
        throw std::domain_error("kummer_1f1: |z| beyond the series accuracy cap (60)");
    double pole;
    if (near_nonpositive_int(b, &pole))
        throw std::domain_error("kummer_1f1: lower parameter at non-positive integer");
    cdd sum = cdd_from(1.0);
    cdd term = cdd_from(1.0);
    for (int m = 0; m < 800; ++m) {
        cdd num = cdd_mul(shift_exact(a, m), z);
        cdd den = cdd_mul(shift_exact(b, m), static_cast<double>(m + 1));
        term = cdd_div(cdd_mul(term, cdd_value(num)), den);
        sum = cdd_add(sum, term);
        if (cdd_abs(term) < 1e-35 * std::max(1.0, cdd_abs(sum)) && m > 4)
            return cdd_value(sum);
    }
    throw std::runtime_error("kummer_1f1: series did not converge");
}

namespace {

// Sum of a factorially divergent tail sum_{s} c_s, c_0 = 1, with the ratio
// c_{s+1}/c_s supplied; truncates at the smallest term (superasymptotic rule)
// and reports that term as the attainable accuracy.
template <typename Ratio>
cplx smallest_term_sum(Ratio ratio, int max_terms) {
    cplx sum = 1.0;
    cplx term = 1.0;
    double best = 1.0;
    for (int s = 0; s < max_terms; ++s) {
        cplx next = term * ratio(s);
        if (std::abs(next) >= std::abs(term) && std::abs(term) < 1e-3) break;
        if (std::abs(next) < 1e-20) {
            sum += next;
            break;
        }
        term = next;
        sum += term;
        best = std::min(best, std::abs(term));
    }
    return sum;
}

}  // namespace

cplx kummer_1f1_asymptotic(cplx a, cplx b, cplx z) {
    if (std::abs(z) < 8.0)
        throw std::domain_error("kummer_1f1_asymptotic: |z| too small for the expansion");
    // compound expansion: both sectors kept, each truncated at its smallest
    // term; on the imaginary axis the two contributions are comparable.
    cplx s1 = smallest_term_sum(
        [&](int s) {
            cplx sf(static_cast<double>(s), 0.0);
            return (a + sf) * (a - b + 1.0 + sf) / ((sf + 1.0) * (-z));
        },
        256);
    cplx s2 = smallest_term_sum(
        [&](int s) {
            cplx sf(static_cast<double>(s), 0.0);
            return (b - a + sf) * (1.0 - a + sf) / ((sf + 1.0) * z);
        },
        256);
    cplx t1 = std::exp(-a * std::log(-z)) * rgamma(b - a) * s1;
    cplx t2 = std::exp(z + (a - b) * std::log(z)) * rgamma(a) * s2;
    return gamma(b) * (t1 + t2);
}

cplx whittaker_w(cplx kappa_idx, cplx mu_idx, cplx z) {
    if (std::abs(z) > 40.0)
        throw std::domain_error("whittaker_w: |z| beyond the series accuracy cap (40)");
    cplx two_mu = 2.0 * mu_idx;
    double n = std::round(two_mu.real());
    if (std::abs(two_mu.imag()) < 1e-12 && std::abs(two_mu.real() - n) < 1e-9)
        throw std::domain_error("whittaker_w: 2*mu at an integer (logarithmic case)");
    auto m_sol = [&](cplx mu) {
        return std::exp(-z / 2.0 + (0.5 + mu) * std::log(z)) *
               kummer_1f1(0.5 + mu - kappa_idx, 1.0 + 2.0 * mu, z);
    };
    cplx c_plus = gamma(-two_mu) * rgamma(0.5 - mu_idx - kappa_idx);
    cplx c_minus = gamma(two_mu) * rgamma(0.5 + mu_idx - kappa_idx);
    return c_plus * m_sol(mu_idx) + c_minus * m_sol(-mu_idx);
}

SiCi sine_cosine_integrals(double x) {
    if (!(x > 0.0)) throw std::domain_error("sine_cosine_integrals: needs x > 0");
    SiCi out;
    if (x <= 28.0) {
        // ascending series, double-double against the alternating cancellation;
        // two_prod(x, x) keeps the squared variable exact so the largest term
        // does not amplify an input rounding.
        dd mx2 = dd_mul(two_prod(x, x), -1.0);
        dd si{x, 0.0};       // n = 0 term of the sine integral
        dd ci{0.0, 0.0};     // entire part: Ci - gamma - ln x
        dd even{1.0, 0.0};   // (-1)^n x^(2n) / (2n)!
        for (int n = 1; n <= 160; ++n) {
            double tn = 2.0 * n;
            even = dd_div(dd_mul(even, mx2), dd{(tn - 1.0) * tn, 0.0});
            ci = dd_add(ci, dd_div(even, dd{tn, 0.0}));
            dd odd = dd_div(dd_mul(even, x), dd{tn + 1.0, 0.0});
            si = dd_add(si, dd_div(odd, dd{tn + 1.0, 0.0}));
            if (std::abs(even.hi) < 1e-35 && n > 4) break;
        }
        out.si = si.hi + si.lo;
        out.ci = kEulerGamma + std::log(x) + (ci.hi + ci.lo);
        return out;
    }
    // auxiliary-function asymptotics, each tail cut at its smallest term
    double inv2 = 1.0 / (x * x);
    double f = 1.0, tf = 1.0;
    for (int s = 1; s < 64; ++s) {
        double nf = -tf * (2.0 * s - 1.0) * (2.0 * s) * inv2;
        if (std::abs(nf) >= std::abs(tf)) break;
        tf = nf;
        f += tf;
    }
    double g = 1.0, tg = 1.0;
    for (int s = 1; s < 64; ++s) {
        double ng = -tg * (2.0 * s) * (2.0 * s + 1.0) * inv2;
        if (std::abs(ng) >= std::abs(tg)) break;
        tg = ng;
        g += tg;
    }
    f /= x;
    g *= inv2;
    double c = std::cos(x), s = std::sin(x);
    out.si = 0.5 * kPi - f * c - g * s;
    out.ci = f * s - g * c;
    return out;
}

cplx principal_log_cut(cplx z, double cut_angle) {
    if (z == cplx(0.0)) throw std::domain_error("principal_log_cut: log of zero");
    double phi = std::arg(z);
    double r = std::fmod(phi - cut_angle, 2.0 * kPi);
    if (r <= 0.0) r += 2.0 * kPi;
    return {std::log(std::abs(z)), cut_angle + r};
}

}  // namespace bteo::specfun
