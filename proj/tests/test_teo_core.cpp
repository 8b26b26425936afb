#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "bteo/background.hpp"
#include "bteo/oracle.hpp"
#include "bteo/teo_core.hpp"
#include "specfun_reference.inc"

using namespace bteo;
using doctest::Approx;

namespace {

double frob(const TeoMatrix& a, const TeoMatrix& b) {
    double d11 = std::abs(a.k11 - b.k11), d12 = std::abs(a.k12 - b.k12);
    return std::sqrt(2.0 * (d11 * d11 + d12 * d12));
}

double defect(const TeoMatrix& m) {
    return std::abs(std::norm(m.k11) + std::norm(m.k12) - 1.0);
}

// Stiff-background mode with transverse expansion parameter eta at k3 = 5.
Mode stiff_mode(double eta, double k3 = 5.0) {
    double kap = std::sqrt(2.0 * k3 * eta);
    return {0.6 * kap, 0.8 * kap, k3};
}

}  // namespace

TEST_CASE("kernel ratio functions match extended-precision references") {
    // Frozen rows: stiff background, mode (3,4,5), window [0.5, 2.0].
    Background bg = Background::stiff_fluid();
    Mode k{3.0, 4.0, 5.0};
    for (const auto& row : refvals::kRZ) {
        double z = row.v[0].re;
        CAPTURE(z);
        auto rz = teo::rz_functions(z, bg, k, 0.5, 2.0);
        cplx r_ref(row.v[1].re, row.v[1].im);
        cplx z_ref(row.v[2].re, row.v[2].im);
        cplx z0_ref(row.v[3].re, row.v[3].im);
        CHECK(std::abs(rz.r - r_ref) <= 1e-11 * std::abs(r_ref));
        CHECK(std::abs(rz.z - z_ref) <= 1e-11 * std::abs(z_ref));
        CHECK(std::abs(rz.z0 - z0_ref) <= 1e-11 * std::abs(z0_ref));
    }
    // The cross-product combination vanishes identically at z = 0.
    auto rz0 = teo::rz_functions(0.0, bg, k, 0.5, 2.0);
    CHECK(std::abs(rz0.r) <= 1e-12 * std::abs(rz0.z0));
    CHECK(std::abs(rz0.z - rz0.z0) == 0.0);
}

TEST_CASE("kernel normalization identity holds up to large phase order") {
    // z0 must equal pi*xd/(2*cosh(pi*tau/(2(1-delta)))) analytically; the
    // recorded deviation measures Bessel accuracy at complex order
    // 1/2 + i*tau/(2(1-delta)).
    Background bg = Background::stiff_fluid();
    for (double tau : {20.0, 50.0, 100.0}) {
        CAPTURE(tau);
        double t = tau / 10.0;  // k3 = 5
        auto rz = teo::rz_functions(0.4, bg, stiff_mode(0.1), t, t);
        CHECK(rz.z0_closed_dev <= 1e-10);
    }
}

TEST_CASE("closed form refuses degenerate parameters and reduces cleanly") {
    Background rad = Background::radiation();   // delta = 1
    Background stiff = Background::stiff_fluid();
    CHECK_THROWS_AS((void)teo::closed_form_teo(rad, {1.0, 1.0, 2.0}, Chirality::negative,
                                               0.5, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS((void)teo::closed_form_teo(stiff, {1.0, 1.0, 0.0}, Chirality::negative,
                                               0.5, 1.0),
                    std::domain_error);
    // kappa = 0: the generator vanishes in the rotating frame; exact identity.
    auto id = teo::closed_form_teo(stiff, {0.0, 0.0, 3.0}, Chirality::negative, 0.5, 2.0);
    CHECK(id.k11 == cplx(1.0, 0.0));
    CHECK(id.k12 == cplx(0.0, 0.0));
}

TEST_CASE("closed form tracks the integrator linearly in eta (delta = 1/2)") {
    Background bg = Background::stiff_fluid();
    // The operator's construction carries an O(eta) residual; the diagonal
    // additionally drifts by a slowly varying log phase of magnitude
    // ~0.43*eta*ln(tau_b/tau_a) across asymptotic windows.  Tolerances are
    // pinned ~30-50% above measured values; all scale linearly in eta.
    struct Case {
        double eta, ta, tb, tol11, tol12, toldef;
    };
    const Case cases[] = {
        // from-origin evolution, tau = 50
        {0.1, 0.0, 5.0, 0.25, 0.12, 0.32},
        // asymptotic window tau: 40 -> 100
        {0.1, 4.0, 10.0, 0.08, 0.007, 0.025},
        {0.02, 4.0, 10.0, 0.016, 0.0014, 0.005},
    };
    for (const auto& c : cases) {
        CAPTURE(c.eta);
        CAPTURE(c.ta);
        auto cf = teo::closed_form_teo(bg, stiff_mode(c.eta), Chirality::negative, c.ta, c.tb);
        auto orc = oracle::evolve_oracle(bg, stiff_mode(c.eta), Chirality::negative, c.ta, c.tb);
        CHECK(std::abs(cf.k11 - orc.k11) <= c.tol11);
        CHECK(std::abs(cf.k12 - orc.k12) <= c.tol12);
        CHECK(defect(cf) <= c.toldef);
    }
    // Linearity: scaling eta by 1/5 scales the widest-window error by ~1/5.
    auto err11 = [&](double eta) {
        auto cf = teo::closed_form_teo(bg, stiff_mode(eta), Chirality::negative, 2.0, 10.0);
        auto orc = oracle::evolve_oracle(bg, stiff_mode(eta), Chirality::negative, 2.0, 10.0);
        return std::abs(cf.k11 - orc.k11);
    };
    double ratio = err11(0.02) / err11(0.1);
    CHECK(ratio > 0.14);
    CHECK(ratio < 0.26);
}

TEST_CASE("closed form tracks the integrator at delta = 1/4") {
    Background bg = Background::axial_kasner();
    // eta = kappa^2/(2*k3^{1/2}), k3 = 8; tau = 12 * t^{4/3}.
    double eta = 0.02;
    double kap = std::sqrt(2.0 * eta * std::sqrt(8.0));
    Mode k{0.6 * kap, 0.8 * kap, 8.0};
    double t_a = std::pow(20.0 / 12.0, 0.75);
    for (double tau_b : {40.0, 80.0}) {
        CAPTURE(tau_b);
        double t_b = std::pow(tau_b / 12.0, 0.75);
        auto cf = teo::closed_form_teo(bg, k, Chirality::negative, t_a, t_b);
        auto orc = oracle::evolve_oracle(bg, k, Chirality::negative, t_a, t_b);
        CHECK(std::abs(cf.k11 - orc.k11) <= 0.010);   // measured 6.8e-3
        CHECK(std::abs(cf.k12 - orc.k12) <= 0.0006);  // measured 3.6e-4
        CHECK(defect(cf) <= 0.0010);                  // measured 6.6e-4
    }
}

TEST_CASE("off-diagonal power quarters when transverse momentum halves") {
    Background bg = Background::stiff_fluid();
    double kap = std::sqrt(2.0 * 5.0 * 0.02);
    Mode full{0.6 * kap, 0.8 * kap, 5.0};
    Mode half{0.3 * kap, 0.4 * kap, 5.0};
    auto a = teo::closed_form_teo(bg, full, Chirality::negative, 0.0, 5.0);
    auto b = teo::closed_form_teo(bg, half, Chirality::negative, 0.0, 5.0);
    CHECK(std::norm(a.k12) / std::norm(b.k12) == Approx(4.0).epsilon(0.05));
}

TEST_CASE("first-order normalization is exact at small transverse momentum") {
    Background bg = Background::stiff_fluid();
    auto cf = teo::closed_form_teo(bg, stiff_mode(1e-6), Chirality::negative, 0.0, 4.0);
    auto orc = oracle::evolve_oracle(bg, stiff_mode(1e-6), Chirality::negative, 0.0, 4.0);
    CHECK(std::abs(cf.k12 - orc.k12) <= 1e-4 * std::abs(orc.k12));
}

TEST_CASE("short-window operator has the advertised error order") {
    // From the origin the deviation falls like s^(2*delta).
    struct Case {
        Background bg;
        double delta;
    };
    const Case cases[] = {
        {Background::axial_kasner(), 0.25},
        {Background::stiff_fluid(), 0.5},
        {{2.0 / 3.0, 0.5, 0.0}, 0.75},
    };
    Mode k{0.6, 0.8, 2.0};
    for (const auto& c : cases) {
        CAPTURE(c.delta);
        double e[2];
        int i = 0;
        for (double s : {1e-3, 1e-2}) {
            double t = std::pow(s, 1.0 / c.bg.mu);
            auto st = teo::short_time_teo(c.bg, k, Chirality::negative, 0.0, t);
            auto orc = oracle::evolve_oracle(c.bg, k, Chirality::negative, 0.0, t);
            e[i++] = frob(st, orc);
        }
        double slope = std::log10(e[1] / e[0]);
        CHECK(slope == Approx(2.0 * c.delta).epsilon(0.13));
    }
    // Structure at t_A = 0: unit diagonal, off-diagonal k_plus s^delta/(mu delta).
    Background stiff = Background::stiff_fluid();
    auto st0 = teo::short_time_teo(stiff, k, Chirality::negative, 0.0, 0.01);
    auto d = derive_scalars(stiff, k, 0.01, 0.01);
    CHECK(st0.k11 == cplx(1.0, 0.0));
    CHECK(st0.k12 == d.k_plus * std::pow(d.s, d.delta) / (stiff.mu * d.delta));
    // One-step window form: identity at zero width, O(dt^2) error otherwise.
    auto stw = teo::short_time_teo(stiff, k, Chirality::negative, 1.0, 1.0);
    CHECK(stw.k11 == cplx(1.0, 0.0));
    CHECK(stw.k12 == cplx(0.0, 0.0));
    for (double dt : {1e-3, 4e-3}) {
        CAPTURE(dt);
        auto st = teo::short_time_teo(stiff, k, Chirality::negative, 1.0, 1.0 + dt);
        auto orc = oracle::evolve_oracle(stiff, k, Chirality::negative, 1.0, 1.0 + dt);
        CHECK(frob(st, orc) <= 5.0 * dt * dt);  // measured 2.94*dt^2
    }
}

TEST_CASE("conformally flat operator is exact") {
    Background rad = Background::radiation();
    const Mode modes[] = {{1.0, 2.0, 3.0}, {-4.0, 0.5, -2.0}, {0.0, 0.0, 7.0}};
    for (const auto& k : modes) {
        for (double t : {0.5, 2.0, 4.0}) {
            CAPTURE(k.k1);
            CAPTURE(t);
            auto cf = teo::conformal_exact_teo(rad, k, Chirality::negative, 0.0, t);
            auto orc = oracle::evolve_oracle(rad, k, Chirality::negative, 0.0, t);
            CHECK(frob(cf, orc) <= 5e-9);  // limited by the integrator tolerance
            CHECK(defect(cf) <= 1e-14);
        }
    }
    // Literal form at t_A = 0 for mu = nu = 1/2: diagonal
    // e^{-2ik3 sqrt(t)}(cos(2k sqrt(t)) + i(k3/k)sin(...)), off-diagonal
    // (k_plus/k) e^{-2ik3 sqrt(t)} sin(...).
    {
        Mode k{1.0, 2.0, 3.0};
        double t = 2.0, rt = std::sqrt(t);
        double ktot = std::sqrt(1.0 + 4.0 + 9.0);
        cplx i(0.0, 1.0);
        cplx ph = std::exp(-2.0 * i * 3.0 * rt);
        cplx k11 = ph * (std::cos(2.0 * ktot * rt) + i * (3.0 / ktot) * std::sin(2.0 * ktot * rt));
        cplx k12 = (cplx(2.0, 1.0) / ktot) * ph * std::sin(2.0 * ktot * rt);
        auto cf = teo::conformal_exact_teo(rad, k, Chirality::negative, 0.0, t);
        CHECK(std::abs(cf.k11 - k11) <= 1e-14);
        CHECK(std::abs(cf.k12 - k12) <= 1e-14);
    }
    // Composition over an intermediate time is exact.
    {
        Mode k{1.0, 2.0, 3.0};
        auto a = teo::conformal_exact_teo(rad, k, Chirality::negative, 0.5, 1.5);
        auto b = teo::conformal_exact_teo(rad, k, Chirality::negative, 1.5, 3.0);
        auto whole = teo::conformal_exact_teo(rad, k, Chirality::negative, 0.5, 3.0);
        CHECK(frob(b.compose_after(a), whole) <= 1e-12);
    }
    // Purely longitudinal mode evolves trivially in the rotating frame.
    auto idm = teo::conformal_exact_teo(rad, {0.0, 0.0, -4.0}, Chirality::negative, 0.25, 2.25);
    CHECK(std::abs(idm.k11 - cplx(1.0, 0.0)) <= 1e-14);
    CHECK(std::abs(idm.k12) <= 1e-14);
    // Wrong background class is refused.
    CHECK_THROWS_AS((void)teo::conformal_exact_teo(Background::stiff_fluid(), {1.0, 1.0, 1.0},
                                                   Chirality::negative, 0.5, 1.0),
                    std::domain_error);
}

TEST_CASE("four-spinor dressing carries phases and volume factor") {
    Background bg = Background::stiff_fluid();
    Mode k{1.0, -2.0, 3.0};
    double ta = 0.7, t = 2.4;
    auto weyl = teo::closed_form_teo(bg, k, Chirality::negative, ta, t);
    auto dt = teo::dirac_teo(weyl, bg, k, Chirality::negative);

    // Volume factor (|g(t_A)|/|g(t)|)^{1/4}.
    CHECK(dt.scale ==
          Approx(std::pow(metric_det_abs(bg, ta) / metric_det_abs(bg, t), 0.25)).epsilon(1e-14));

    // Manual conjugation by Q = diag(q, conj q), q = exp(-i k3 (t^mu - t_ref^mu)/mu):
    // negative chirality dresses as Q^{-1}(t) K Q(t_A).
    auto qph = [&](double tt) {
        return std::exp(cplx(0.0, -1.0) * k.k3 *
                        (std::pow(tt, bg.mu) - std::pow(bg.t_ref, bg.mu)) / bg.mu);
    };
    cplx m11 = std::conj(qph(t)) * weyl.k11 * qph(ta);
    cplx m12 = std::conj(qph(t)) * weyl.k12 * std::conj(qph(ta));
    CHECK(std::abs(dt.m11 - m11) <= 1e-14);
    CHECK(std::abs(dt.m12 - m12) <= 1e-14);

    // Zero-width window: exact 4x4 identity.
    auto wid = teo::conformal_exact_teo(Background::radiation(), k, Chirality::negative, ta, ta);
    auto did = teo::dirac_teo(wid, Background::radiation(), k, Chirality::negative);
    auto m4 = did.full4();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(std::abs(m4[4 * r + c] - (r == c ? cplx(1.0) : cplx(0.0))) <= 1e-15);

    // Block layout: 1_2 (x) ktilde with the scale folded into the entries.
    auto m = dt.full4();
    CHECK(m[0] == m[10]);   // (0,0) == (2,2)
    CHECK(m[1] == m[11]);   // (0,1) == (2,3)
    CHECK(m[4] == m[14]);   // (1,0) == (3,2)
    CHECK(m[5] == m[15]);   // (1,1) == (3,3)
    CHECK(m[2] == cplx(0.0));
    CHECK(m[8] == cplx(0.0));
    CHECK(std::abs(m[0] - dt.scale * m11) <= 1e-15);
    CHECK(std::abs(m[4] - dt.scale * (-std::conj(m12))) <= 1e-15);

    // The dressed product ktilde^dag ktilde is scalar:
    // scale^2 (|k11|^2 + |k12|^2) 1.
    double scalar = dt.scale * dt.scale * (std::norm(weyl.k11) + std::norm(weyl.k12));
    cplx col0_sq = std::conj(m[0]) * m[0] + std::conj(m[4]) * m[4];
    cplx cross = std::conj(m[0]) * m[1] + std::conj(m[4]) * m[5];
    CHECK(std::abs(col0_sq - scalar) <= 1e-12 * scalar);
    CHECK(std::abs(cross) <= 1e-14);

    // Positive chirality is the momentum-flipped negative operator.
    auto pos = teo::closed_form_teo(bg, k, Chirality::positive, ta, t);
    auto negflip = teo::closed_form_teo(bg, k.flipped(), Chirality::negative, ta, t);
    CHECK(pos.k11 == negflip.k11);
    CHECK(pos.k12 == negflip.k12);
}
