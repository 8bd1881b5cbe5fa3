#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "qdilog/dilog.hpp"
#include "qdilog/verify.hpp"

using namespace qdilog;

namespace {
constexpr double kPi = 3.14159265358979323846;
const ModularParameter p07 = ModularParameter::create(0.7);
}  // namespace

TEST_CASE("zeta_b closed form") {
    // b = 1: exponent (pi/2)(1/3 + 1/2) = 5 pi / 12
    Complex z1 = zeta_b(1.0);
    CHECK(std::abs(z1 - std::exp(Complex(0.0, 5.0 * kPi / 12.0))) < 1e-15);
    CHECK(std::fabs(std::abs(zeta_b(0.37)) - 1.0) < 1e-15);

    // independent oracle: same formula in extended precision
    long double b = 0.7L;
    long double ang = 0.5L * 3.141592653589793238462643383279502884L *
                      ((b * b + 1.0L / (b * b)) / 6.0L + 0.5L);
    Complex ref((double)std::cos(ang), (double)std::sin(ang));
    CHECK(std::abs(zeta_b(0.7) - ref) < 1e-14);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ModularParameter::create(0.05), InvalidParameter);
    CHECK_THROWS_AS(ModularParameter::create(0.99), InvalidParameter);
    // b^2 = 0.25 = 1/4 resonant
    CHECK_THROWS_AS(ModularParameter::create(0.5), InvalidParameter);
    // b^2 = 0.36 = 9/25 resonant, but accepted with the override
    CHECK_THROWS_AS(ModularParameter::create(0.6), InvalidParameter);
    CHECK(ModularParameter::create(0.6, true).b() == 0.6);
    CHECK(ModularParameter::create(0.7).Q() == doctest::Approx(0.7 + 1.0 / 0.7));
}

TEST_CASE("gb_strip critical line modulus") {
    GbValue g = gb_strip(p07, Complex(0.5 * p07.Q(), 0.3));
    CHECK(std::fabs(std::abs(g.value) - 1.0) < 1e-9);
    CHECK(g.abs_error_estimate < 1e-7);
}

TEST_CASE("gb_strip reflection at generic point") {
    const double Q = p07.Q();
    Complex z = 0.4 * Q + Complex(0.0, 0.2);
    GbValue g1 = gb_strip(p07, z);
    GbValue g2 = gb_strip(p07, Q - z);
    Complex target = std::exp(Complex(0.0, kPi) * z * (z - Q));
    CHECK(std::abs(g1.value * g2.value - target) / std::abs(target) < 1e-8);
}

TEST_CASE("gb_strip margin guard") {
    CHECK_THROWS_AS(gb_strip(p07, Complex(0.01, 0.0)), MarginViolation);
}

TEST_CASE("reflection fixed point and documented branch") {
    const double Q = p07.Q();
    GbValue g = gb_strip(p07, Complex(0.5 * Q, 0.0));
    Complex sq_target = std::exp(Complex(0.0, -kPi * Q * Q / 4.0));
    CHECK(std::abs(g.value * g.value - sq_target) < 1e-8);
    // observed branch: G_b(Q/2) = + e^{-i pi Q^2 / 8}
    Complex principal = std::exp(Complex(0.0, -kPi * Q * Q / 8.0));
    CHECK(std::abs(g.value - principal) < 1e-8);
}

TEST_CASE("lattice classification") {
    GbValue origin = gb_eval(p07, Complex(0.0, 0.0));
    CHECK(origin.at_pole);
    CHECK_FALSE(origin.at_zero);

    double b = p07.b();
    GbValue pole = gb_eval(p07, Complex(-2.0 * b - 1.0 / b, 0.0));
    CHECK(pole.at_pole);

    GbValue zero = gb_eval(p07, Complex(p07.Q() + b, 0.0));
    CHECK(zero.at_zero);
    CHECK(zero.value == Complex(0.0, 0.0));

    LatticePoint lp = classify_lattice(p07, Complex(-3.0 * b - 2.0 / b, 0.0));
    CHECK(lp.kind == LatticePoint::Kind::Pole);
    CHECK(lp.n == 3);
    CHECK(lp.m == 2);

    CHECK(classify_lattice(p07, Complex(0.3, 0.0)).kind == LatticePoint::Kind::None);
    CHECK(classify_lattice(p07, Complex(0.0, 0.5)).kind == LatticePoint::Kind::None);
}

TEST_CASE("gb_eval reduction against independent b^{-1} step") {
    // z = 0.3 and z + 1/b are both inside the safe strip for b = 0.7; the
    // reduction machinery only ever takes b-steps, so this checks the other
    // functional equation at the quadrature level.
    double binv = p07.b_inv();
    Complex z(0.3, 0.0);
    GbValue g0 = gb_eval(p07, z);
    GbValue g1 = gb_eval(p07, z + binv);
    Complex factor = 1.0 - std::exp(Complex(0.0, 2.0 * kPi * binv) * z);
    CHECK(std::abs(g1.value / g0.value - factor) / std::abs(factor) < 1e-8);
}

TEST_CASE("gb_eval far outside the strip") {
    // reflection still holds after multi-step reduction on both sides
    const double Q = p07.Q();
    Complex z(-1.3, 0.45);
    GbValue g1 = gb_eval(p07, z);
    GbValue g2 = gb_eval(p07, Q - z);
    Complex target = std::exp(Complex(0.0, kPi) * z * (z - Q));
    CHECK(std::abs(g1.value * g2.value - target) / std::abs(target) < 1e-7);
}

TEST_CASE("asymptotics toward both ends of the critical line") {
    auto up = sweeps::asymptotics(p07, true, QuadratureSpec{});
    CHECK(up.dev12 < 1e-4);
    CHECK(up.dev5 < 1e-4);
    CHECK(up.dev8 <= up.dev5 + up.err5 + up.err8 + 1e-15);
    auto lo = sweeps::asymptotics(p07, false, QuadratureSpec{});
    CHECK(lo.dev12 < 1e-4);
}

TEST_CASE("little_gb unitarity and limits") {
    ModularParameter p08 = ModularParameter::create(0.8, true);
    GbValue g = little_gb(p08, 1.7);
    CHECK(std::fabs(std::abs(g.value) - 1.0) < 1e-9);

    GbValue g0 = little_gb(p07, 1e-6);
    CHECK(std::abs(g0.value - 1.0) < 1e-3);

    // self-duality: g_b(x) = g_{1/b}(x^{1/b^2})
    double x = 1.7;
    GbValue lhs = little_gb(p08, x, {}, false);
    GbValue rhs = little_gb(p08, std::pow(x, 1.0 / (0.8 * 0.8)), {}, true);
    CHECK(std::abs(lhs.value - rhs.value) < 1e-10);

    CHECK_THROWS_AS(little_gb(p07, -1.0), InvalidParameter);
}

TEST_CASE("qbeta generic, symmetric, and continued") {
    Complex t(0.2, 0.1), tau(0.05, 0.0);
    GbValue v1 = qbeta(p07, t, tau);
    GbValue v2 = qbeta(p07, t, t - tau);
    CHECK(std::abs(v1.value - v2.value) / std::abs(v1.value) < 1e-8);

    // integer continuation n = 2, k = 1 gives 1 + q^2
    Complex q2 = p07.q() * p07.q();
    GbValue c = qbeta(p07, 2.0 * p07.b(), p07.b());
    CHECK(std::abs(c.value - (1.0 + q2)) / std::abs(1.0 + q2) < 1e-12);

    // one or two singular arguments have no finite limit
    CHECK_THROWS_AS(qbeta(p07, p07.b(), Complex(0.05, 0.0)), UnresolvablePole);
    // all three singular but on mixed lattice rows: also unresolvable
    CHECK_THROWS_AS(qbeta(p07, p07.b() + p07.b_inv(), p07.b()), UnresolvablePole);
}

TEST_CASE("fourier transform lemma") {
    for (double x : {1.0, 2.0}) {
        FtCheckResult r = ft_gb_check(p07, x);
        CHECK(r.residual < 1e-6);
    }
    // x -> 0+ limit
    FtCheckResult r0 = ft_gb_check(p07, 1e-4);
    CHECK(std::abs(r0.lhs - 1.0) < 1e-3);

    // x = 1: transform equals conj(zeta_b)/G_b(Q/2)
    FtCheckResult r1 = ft_gb_check(p07, 1.0);
    GbValue gq = gb_eval(p07, Complex(0.5 * p07.Q(), 0.0));
    Complex expect = std::conj(zeta_b(0.7)) / gq.value;
    CHECK(std::abs(r1.lhs - expect) / std::abs(expect) < 1e-6);
}

TEST_CASE("error estimates bound refinement drift") {
    double rate = sweeps::error_honesty_violation_rate(p07, 40, 11, QuadratureSpec{});
    CHECK(rate <= 0.05);
}
