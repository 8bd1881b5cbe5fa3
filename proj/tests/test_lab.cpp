#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qdilog/gaussian_lab.hpp"
#include "qdilog/verify.hpp"

using namespace qdilog;

namespace {
constexpr double kPi = 3.14159265358979323846;
const ModularParameter p07 = ModularParameter::create(0.7);
}  // namespace

TEST_CASE("identity monomial leaves the wave unchanged") {
    GaussianWave f = GaussianWave::unit(2, 1.5);
    WeylMonomial id{Exponents(2, 1), PhaseCoefficient::one()};
    GaussianWave g = apply_monomial(id, f, LabContext{0.7, {0.3}});
    CHECK(g.log_amp == f.log_amp);
    CHECK(g.lin == f.lin);
    CHECK(g.width == f.width);
}

TEST_CASE("pure momentum exponential shifts the argument") {
    // e^{pi b (2p)} on C e^{-a u^2} must return C e^{-a (u - i b)^2}
    const double b = 0.7, a = 1.0;
    Exponents e(1, 0);
    e.eta(0) = 2;
    GaussianWave f = GaussianWave::unit(1, a);
    GaussianWave g = apply_monomial({e, PhaseCoefficient::one()}, f, LabContext{b, {}});
    // expansion: -a(u - i b)^2 = -a u^2 + 2 i a b u + a b^2
    CHECK(std::abs(g.log_amp - Complex(a * b * b, 0.0)) < 1e-14);
    CHECK(std::abs(g.lin[0] - Complex(0.0, 2.0 * a * b)) < 1e-14);
    CHECK(g.width[0] == a);

    // oracle: the shift operator acting as a derivative series, evaluated
    // pointwise at a few real u
    for (double u : {-0.5, 0.2, 1.0}) {
        Complex direct = std::exp(-a * (Complex(u, 0.0) - Complex(0.0, b)) *
                                  (Complex(u, 0.0) - Complex(0.0, b)));
        CHECK(std::abs(g.value({Complex(u, 0.0)}) - direct) < 1e-12);
    }
}

TEST_CASE("pure position exponential adds to the linear slot") {
    const double b = 0.7;
    Exponents e(1, 0);
    e.xi(0) = 1;
    GaussianWave f = GaussianWave::unit(1, 1.0);
    GaussianWave g = apply_monomial({e, PhaseCoefficient::one()}, f, LabContext{b, {}});
    CHECK(std::abs(g.lin[0] - Complex(kPi * b, 0.0)) < 1e-14);
    CHECK(std::abs(g.log_amp) < 1e-14);
}

TEST_CASE("symbolic product equals sequential application") {
    double worst = sweeps::monomial_pair_agreement_max(0.7, 200, 7);
    CHECK(worst < 1e-10);
}

TEST_CASE("sl2 relations hold numerically on Gaussian states") {
    PositiveRep r = build_sl2();
    auto grid = default_grid(1);
    std::vector<GaussianWave> waves = {GaussianWave::unit(1, 1.0), GaussianWave::unit(1, 2.0)};
    std::vector<double> lambdas = {0.5};

    CHECK(numeric_relation_check(r, "K1_eps1_exchange", 0.7, waves, grid, lambdas) < 1e-10);
    CHECK(numeric_relation_check(r, "K1_phi1_exchange", 0.7, waves, grid, lambdas) < 1e-10);
    CHECK(numeric_relation_check(r, "eps1_phi1_commutator", 0.7, waves, grid, lambdas) < 1e-9);

    // negative control: q^{a_11 - 1} in place of q^{a_11}
    double wrong =
        numeric_relation_check(r, "K1_eps1_exchange_wrong_power", 0.7, waves, grid, lambdas);
    CHECK(wrong >= 0.1);
}

TEST_CASE("sl3 exchange relation also validates numerically") {
    PositiveRep r = build_sl3();
    auto grid_small = std::vector<std::vector<Complex>>{
        {Complex(-0.5, 0), Complex(0.3, 0), Complex(0.8, 0)},
        {Complex(0.4, 0), Complex(-0.2, 0), Complex(0.1, 0)},
    };
    std::vector<GaussianWave> waves = {GaussianWave::unit(3, 1.0)};
    std::vector<double> lambdas = {0.4, 0.9};
    CHECK(numeric_relation_check(r, "K1_eps2_exchange", 0.7, waves, grid_small, lambdas) < 1e-10);
    CHECK(numeric_relation_check(r, "K2_eps2_exchange", 0.7, waves, grid_small, lambdas) < 1e-10);
}

TEST_CASE("wavepacket coefficient basics") {
    WavepacketCoeff w0 = wavepacket_coeff(p07, 0.5, Complex(0.0, 0.0));
    CHECK(std::abs(w0.value - 1.0) < 1e-12);

    for (double t : {-2.0, -0.25, 0.75, 3.0}) {
        WavepacketCoeff w = wavepacket_coeff(p07, 0.5, Complex(t, 0.0));
        CHECK(std::fabs(std::abs(w.value) - 1.0) < 1e-9);
    }
    CHECK_THROWS_AS(wavepacket_coeff(p07, -0.5, Complex(0.0, 0.0)), InvalidParameter);
}

TEST_CASE("wavepacket functional-equation step") {
    for (double t : {-1.0, 0.3, 1.7})
        CHECK(wavepacket_fe_step_residual(p07, 0.5, Complex(t, 0.0)) < 1e-8);
}

TEST_CASE("wavepacket continuation to t = -i b") {
    ContinuationCheck cc = wavepacket_continuation_check(p07, 0.5, {1e2, 1e3, 1e4});
    // quadrature value against the exact one-step functional equation factor
    CHECK(cc.residual_quad_vs_algebraic < 1e-8);
    // exact target: q^{-1/2} e^{-pi b lambda} (1 + q e^{2 pi b lambda})
    const double b = 0.7, lam = 0.5;
    Complex q = std::exp(Complex(0.0, kPi * b * b));
    Complex expect = std::pow(q, -0.5) * std::exp(-kPi * b * lam) *
                     (1.0 + q * std::exp(2.0 * kPi * b * lam));
    CHECK(std::abs(cc.algebraic - expect) < 1e-14);
    // narrow-Gaussian matrix element of the symbolic eps after extrapolation
    CHECK(cc.residual_gaussian_vs_quad < 1e-6);
}

TEST_CASE("q-binomial expansion against the continued q-beta") {
    // n = 1: coefficients are exactly (1, 1)
    auto r1 = qbinom_operator_check(p07, 1);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] < 1e-13);
    CHECK(r1[1] < 1e-13);

    // n = 2, k = 1: exact side 1 + q^2 in VU-order
    auto r2 = qbinom_operator_check(p07, 2);
    for (double res : r2) CHECK(res < 1e-6);

    for (int n : {3, 4, 5}) {
        auto rn = qbinom_operator_check(p07, n);
        for (double res : rn) CHECK(res < 1e-5);
    }
}

TEST_CASE("wave residual scale handling") {
    WaveSum a, b;
    a.waves.push_back(GaussianWave::unit(1, 1.0));
    b.waves.push_back(GaussianWave::unit(1, 1.0));
    b.waves[0].log_amp += 1e-12;
    CHECK(wave_residual(a, b, default_grid(1)) < 1e-11);
    b.waves[0].log_amp = std::log(2.0);
    CHECK(wave_residual(a, b, default_grid(1)) > 0.1);
}
