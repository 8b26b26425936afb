#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "bteo/background.hpp"
#include "bteo/oracle.hpp"
#include "bteo/quadrature.hpp"

using bteo::Background;
using bteo::Chirality;
using bteo::cplx;
using bteo::Mode;
using bteo::TeoMatrix;

namespace {

double defect(const TeoMatrix& m) {
    return std::abs(std::norm(m.k11) + std::norm(m.k12) - 1.0);
}

double matdist(const TeoMatrix& a, const TeoMatrix& b) {
    return std::max(std::abs(a.k11 - b.k11), std::abs(a.k12 - b.k12));
}

}  // namespace

TEST_CASE("gauss_kronrod handles polynomial, oscillatory and singular integrands") {
    auto poly = [](double x) { return cplx(x * x * x, 0.0); };
    CHECK(std::abs(bteo::quad::gauss_kronrod(poly, 0.0, 1.0).value.real() - 0.25) < 1e-14);

    auto osc = [](double x) { return cplx(std::cos(40.0 * x), std::sin(40.0 * x)); };
    cplx want = (std::exp(cplx(0.0, 40.0)) - 1.0) / cplx(0.0, 40.0);
    auto got = bteo::quad::gauss_kronrod(osc, 0.0, 1.0, 1e-12, 1e-15);
    CHECK(std::abs(got.value - want) < 1e-11);
    CHECK(got.converged);

    // bare endpoint singularities refine only geometrically; the library
    // always substitutes them away, so plain bisection just needs to get
    // close and report that it gave up
    auto sing = bteo::quad::gauss_kronrod(
        [](double x) { return cplx(1.0 / std::sqrt(x), 0.0); }, 0.0, 1.0, 1e-10, 1e-14);
    CHECK(std::abs(sing.value.real() - 2.0) < 1e-4);
    CHECK_FALSE(sing.converged);
}

TEST_CASE("background scalars and factory presets") {
    CHECK(bteo::derived_delta(Background::radiation()) == doctest::Approx(1.0));
    CHECK(bteo::derived_delta(Background::stiff_fluid()) == doctest::Approx(0.5));
    CHECK(bteo::derived_delta(Background::axial_kasner()) == doctest::Approx(0.25));
    CHECK(bteo::derived_delta(Background::conformal(0.37)) == doctest::Approx(1.0));

    Background rw = Background::radiation();
    CHECK(bteo::metric_det_abs(rw, 2.0) == doctest::Approx(8.0));  // t^3
    Background st = Background::stiff_fluid();
    CHECK(bteo::metric_det_abs(st, 3.0) == doctest::Approx(9.0));  // t^2

    Mode k{1.0, 2.0, -3.0};
    auto d = bteo::derive_scalars(st, k, 0.5, 2.0);
    CHECK(d.delta == doctest::Approx(0.5));
    CHECK(d.s == doctest::Approx(2.0));
    CHECK(d.sigma_A == doctest::Approx(0.25));
    CHECK(d.tau == doctest::Approx(2.0 * -3.0 * 2.0 / 1.0));
    CHECK(d.kappa == doctest::Approx(std::sqrt(5.0)));
    CHECK(d.eta == doctest::Approx(5.0 / (2.0 * 3.0)));
    CHECK(d.x == doctest::Approx(std::sqrt(5.0) * std::sqrt(2.0) / 0.5));
    CHECK(d.lambda.real() == doctest::Approx(0.5));
    CHECK(d.lambda.imag() == doctest::Approx(d.tau));  // tau/(2(1-delta)), delta=1/2
    CHECK(d.k_plus == cplx(2.0, 1.0));                 // t_ref = 0
}

TEST_CASE("kernel correction constants") {
    auto c = bteo::approx_constants(0.5);
    CHECK(c.d1 == doctest::Approx(1.5414940825367983).epsilon(1e-13));
    CHECK(c.d2 == doctest::Approx(1.0651827734743609).epsilon(1e-13));
    CHECK(c.d == doctest::Approx(1.6419729421308622).epsilon(1e-13));
    CHECK_FALSE(c.in_uniform_regime);

    auto k = bteo::approx_constants(0.25);
    CHECK(k.d == doctest::Approx(3.1977887358796979).epsilon(1e-13));
    CHECK(k.in_uniform_regime);

    CHECK(bteo::approx_constants(0.1).d == doctest::Approx(8.1899923264468887).epsilon(1e-13));
    // the correction disappears as the background turns isotropic in stretch
    CHECK(bteo::approx_constants(0.999).d == doctest::Approx(1.000500750806377).epsilon(1e-12));
    CHECK_THROWS(bteo::approx_constants(1.0));
    CHECK_THROWS(bteo::approx_constants(0.0));
}

TEST_CASE("oracle reproduces the purely transverse rotation") {
    // k3 = 0: the generator has a fixed direction, so the operator is the
    // exact rotation by xi = kappa*(w - w_A)/(1 - nu), w = t^(1-nu).
    Background rw = Background::radiation();
    Mode k{3.0, 4.0, 0.0};
    double t_a = 0.25, t = 2.25;
    double xi = 5.0 * (std::sqrt(t) - std::sqrt(t_a)) / 0.5;
    cplx unit = cplx(4.0, 3.0) / 5.0;

    auto got = bteo::oracle::evolve_oracle(rw, k, Chirality::negative, t_a, t);
    CHECK(std::abs(got.k11 - std::cos(xi)) < 1e-9);
    CHECK(std::abs(got.k12 - unit * std::sin(xi)) < 1e-9);
    CHECK(defect(got) < 1e-9);
}

TEST_CASE("oracle satisfies unitarity and the group law") {
    Background rw = Background::radiation();
    Mode k{1.0, 0.5, 2.0};
    auto whole = bteo::oracle::evolve_oracle(rw, k, Chirality::negative, 0.5, 8.0);
    CHECK(defect(whole) < 1e-9);

    auto first = bteo::oracle::evolve_oracle(rw, k, Chirality::negative, 0.5, 3.0);
    auto second = bteo::oracle::evolve_oracle(rw, k, Chirality::negative, 3.0, 8.0);
    CHECK(matdist(whole, second.compose_after(first)) < 1e-8);

    // inverse direction undoes the evolution
    auto back = bteo::oracle::evolve_oracle(rw, k, Chirality::negative, 8.0, 0.5);
    auto round = back.compose_after(whole);
    CHECK(std::abs(round.k11 - 1.0) < 1e-8);
    CHECK(std::abs(round.k12) < 1e-8);
}

TEST_CASE("oracle crosses t = 0 consistently") {
    Background rw = Background::radiation();
    Mode k{0.7, -0.4, 1.3};
    auto direct = bteo::oracle::evolve_oracle(rw, k, Chirality::negative, 0.0, 2.0);
    auto part1 = bteo::oracle::evolve_oracle(rw, k, Chirality::negative, 0.0, 0.3);
    auto part2 = bteo::oracle::evolve_oracle(rw, k, Chirality::negative, 0.3, 2.0);
    CHECK(matdist(direct, part2.compose_after(part1)) < 1e-8);
    CHECK(defect(direct) < 1e-9);
}

TEST_CASE("evolve_state agrees with applying the operator") {
    Background st = Background::stiff_fluid();
    Mode k{0.3, 1.1, -0.8};
    bteo::WeylModeState v0{cplx(0.6, -0.2), cplx(0.1, 0.7)};
    auto op = bteo::oracle::evolve_oracle(st, k, Chirality::positive, 0.4, 5.0);
    auto via_op = op.apply(v0);
    auto direct = bteo::oracle::evolve_state(st, k, Chirality::positive, v0, 0.4, 5.0);
    CHECK(std::abs(via_op.phi1 - direct.phi1) < 1e-8);
    CHECK(std::abs(via_op.phi2 - direct.phi2) < 1e-8);
}

TEST_CASE("positive chirality is the flipped-momentum image") {
    Background st = Background::stiff_fluid();
    Mode k{0.9, -0.3, 1.7};
    cplx p_pos = bteo::oracle::omega_offdiag(st, k, Chirality::positive, 1.7);
    cplx p_neg_flipped =
        bteo::oracle::omega_offdiag(st, k.flipped(), Chirality::negative, 1.7);
    CHECK(std::abs(p_pos - p_neg_flipped) == 0.0);
}

TEST_CASE("picard_teo reduces to the rotation series when k3 = 0") {
    Background rw = Background::radiation();
    Mode k{0.0, 2.0, 0.0};
    double t_a = 0.25, t = 1.0;
    double xi = 2.0 * (1.0 - 0.5) / 0.5;  // = 2
    auto p4 = bteo::oracle::picard_teo(rw, k, Chirality::negative, t_a, t, 4);
    // partial sums of cos/sin up to xi^4/4!
    double cos4 = 1.0 - xi * xi / 2.0 + xi * xi * xi * xi / 24.0;
    double sin3 = xi - xi * xi * xi / 6.0;
    CHECK(std::abs(p4.k11 - cos4) < 1e-9);
    CHECK(std::abs(p4.k12 - cplx(1.0, 0.0) * sin3) < 1e-9);
}

TEST_CASE("picard_teo converges to the oracle on a short window") {
    Background rw = Background::radiation();
    Mode k{1.0, -0.6, 1.5};
    double t_a = 0.8, t = 1.1;
    auto ref = bteo::oracle::evolve_oracle(rw, k, Chirality::negative, t_a, t);
    double prev = 1e9;
    for (int n : {2, 4, 6}) {
        auto p = bteo::oracle::picard_teo(rw, k, Chirality::negative, t_a, t, n);
        double err = matdist(p, ref);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 5e-7);
}
