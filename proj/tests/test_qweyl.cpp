#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qdilog/errors.hpp"
#include "qdilog/phase.hpp"
#include "qdilog/rational.hpp"
#include "qdilog/weyl.hpp"

using namespace qdilog;

namespace {

// independent test-side generator with its own rng
struct Gen {
    std::mt19937_64 rng{12345};
    int rint(int lo, int hi) {
        return lo + int(rng() % std::uint64_t(hi - lo + 1));
    }
    WeylMonomial mono(int nvars = 2, int npars = 1, int span = 4) {
        Exponents e(nvars, npars);
        for (auto& x : e.v) x = rint(-span, span);
        return {e, PhaseCoefficient::unit(rint(-4, 4), rint(-4, 4), rint(0, 7))};
    }
};

// oracle: the symplectic sums computed with explicit loops, independently
// of the engine's implementation
SymplecticPairing oracle_symplectic(const Exponents& x, const Exponents& y) {
    SymplecticPairing s;
    for (int k = 0; k < x.nvars; ++k) {
        s.bb += long(x.xi(k)) * y.eta(k) - long(x.eta(k)) * y.xi(k);
        s.tt += long(x.xit(k)) * y.etat(k) - long(x.etat(k)) * y.xit(k);
        s.cross += long(x.xi(k)) * y.etat(k) - long(x.eta(k)) * y.xit(k);
        s.cross += long(x.xit(k)) * y.eta(k) - long(x.etat(k)) * y.xi(k);
    }
    return s;
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a * b == Rational(1, 18));
    CHECK(Rational(4, 8) == Rational(1, 2));
    CHECK((a - a).is_zero());
    CHECK_THROWS(Rational(1, 0));

    GaussianRational i{Rational(0), Rational(1)};
    CHECK(i * i == GaussianRational{Rational(-1), Rational(0)});
    GaussianRational z{Rational(1, 2), Rational(-3)};
    CHECK(z / z == GaussianRational{Rational(1), Rational(0)});
}

TEST_CASE("zeta8 is a field with the right roots of unity") {
    Zeta8 w = Zeta8::root_power(1);
    CHECK(w * w == Zeta8::root_power(2));
    Zeta8 acc(1);
    for (int i = 0; i < 8; ++i) acc = acc * w;
    CHECK(acc == Zeta8(1));
    CHECK(Zeta8::root_power(4) == Zeta8(-1));
    CHECK(Zeta8::root_power(-3) == Zeta8::root_power(5));

    Zeta8 x{GaussianRational{Rational(1), Rational(2)}, GaussianRational{Rational(-1, 3)}};
    CHECK(x / x == Zeta8(1));
    CHECK((x - x).is_zero());
}

TEST_CASE("phase coefficient ring basics") {
    PhaseCoefficient q = PhaseCoefficient::q_quarter_power(4);
    PhaseCoefficient qi = PhaseCoefficient::q_quarter_power(-4);
    CHECK(q * qi == PhaseCoefficient::one());
    CHECK((q - q).is_zero());
    CHECK((q + qi) * (q - qi) == q * q - qi * qi);

    // numerically equal eighth-root phases must merge: zeta_8^4 = -1, so
    // adding 1 cancels exactly at the structural level
    PhaseCoefficient m1 = PhaseCoefficient::unit(0, 0, 4);
    CHECK((m1 + PhaseCoefficient::one()).is_zero());
    CHECK(PhaseCoefficient::unit(0, 0, 4) == PhaseCoefficient::integer(-1));
    CHECK(PhaseCoefficient::unit(0, 0, 8) == PhaseCoefficient::one());
    CHECK(PhaseCoefficient::unit(0, 0, 2) ==
          PhaseCoefficient::scalar(Zeta8{GaussianRational{Rational(0), Rational(1)}}));

    CHECK(std::abs(q.evaluate(0.7) - std::complex<double>(std::cos(M_PI * 0.49),
                                                          std::sin(M_PI * 0.49))) < 1e-15);
    CHECK(q.is_unit_phase());
    CHECK(PhaseCoefficient::integer(-1).is_plus_minus_one());
    CHECK_FALSE((q + qi).is_unit_phase());
}

TEST_CASE("mono_mul matches the BCH oracle on random pairs") {
    Gen gen;
    for (int i = 0; i < 300; ++i) {
        WeylMonomial m1 = gen.mono(), m2 = gen.mono();
        SymplecticPairing s = oracle_symplectic(m1.exp, m2.exp);
        WeylMonomial prod = mono_mul(m1, m2);
        CHECK(prod.exp == m1.exp + m2.exp);
        PhaseCoefficient expect =
            m1.coeff * m2.coeff * PhaseCoefficient::unit(int(s.bb), int(s.tt), s.cross);
        CHECK(prod.coeff == expect);
    }
}

TEST_CASE("frozen example: K times A") {
    // K = e^{pi b(-2u)}, A = e^{pi b(-u + lambda - 2p)}
    Exponents K(1, 1), A(1, 1);
    K.xi(0) = -2;
    A.xi(0) = -1;
    A.eta(0) = -2;
    A.nu(0) = 1;
    WeylMonomial ka = mono_mul({K, PhaseCoefficient::one()}, {A, PhaseCoefficient::one()});
    WeylMonomial ak = mono_mul({A, PhaseCoefficient::one()}, {K, PhaseCoefficient::one()});
    CHECK(ka.coeff == PhaseCoefficient::q_quarter_power(4));   // phase q
    CHECK(ak.coeff == PhaseCoefficient::q_quarter_power(-4));  // phase q^{-1}
    Exponents comb(1, 1);
    comb.xi(0) = -3;
    comb.eta(0) = -2;
    comb.nu(0) = 1;
    CHECK(ka.exp == comb);
    // overall K A = q^2 A K
    OperatorElement KA = OperatorElement::monomial(ka);
    OperatorElement AK = OperatorElement::monomial(ak);
    CHECK(KA == PhaseCoefficient::q_quarter_power(8) * AK);
}

TEST_CASE("associativity holds exactly") {
    Gen gen;
    for (int i = 0; i < 500; ++i) {
        WeylMonomial m1 = gen.mono(), m2 = gen.mono(), m3 = gen.mono();
        WeylMonomial l = mono_mul(mono_mul(m1, m2), m3);
        WeylMonomial r = mono_mul(m1, mono_mul(m2, m3));
        CHECK(l.exp == r.exp);
        CHECK(l.coeff == r.coeff);
    }
}

TEST_CASE("phase antisymmetry of opposite products") {
    Gen gen;
    for (int i = 0; i < 200; ++i) {
        WeylMonomial m1 = gen.mono(), m2 = gen.mono();
        WeylMonomial l = mono_mul(m1, m2), r = mono_mul(m2, m1);
        SymplecticPairing s = oracle_symplectic(m1.exp, m2.exp);
        CHECK(l.exp == r.exp);
        CHECK(l.coeff == r.coeff * PhaseCoefficient::unit(int(2 * s.bb), int(2 * s.tt),
                                                          2 * s.cross));
    }
}

TEST_CASE("element algebra and commutators") {
    Gen gen;
    WeylMonomial m = gen.mono();
    OperatorElement e = OperatorElement::monomial(m);
    CHECK(commutator(e, e).is_zero());
    CHECK((e - e).is_zero());
    CHECK((e + e) - e == e);

    // dimension mismatch is rejected
    OperatorElement other(3, 1);
    CHECK_THROWS_AS(e * other, DimensionMismatch);
}

TEST_CASE("(V+U)^2 with UV = q^2 VU") {
    OperatorElement U(1, 0), V(1, 0);
    Exponents eu(1, 0), ev(1, 0);
    eu.xi(0) = 2;
    ev.eta(0) = 2;
    U.add_monomial(eu, PhaseCoefficient::one());
    V.add_monomial(ev, PhaseCoefficient::one());

    // exchange relation first
    CHECK(U * V == PhaseCoefficient::q_quarter_power(8) * (V * U));

    OperatorElement sq = (U + V) * (U + V);
    CHECK(sq.monomial_count() == 3);
    Exponents w(1, 0);
    w.xi(0) = 2;
    w.eta(0) = 2;
    // symmetric-normalized cross coefficient q + q^{-1}  (= (q^2+1) in VU-order)
    CHECK(sq.monomials().at(w) ==
          PhaseCoefficient::q_quarter_power(4) + PhaseCoefficient::q_quarter_power(-4));
}

TEST_CASE("divide_exact round trip and failure modes") {
    Gen gen;
    PhaseCoefficient qmqi =
        PhaseCoefficient::q_quarter_power(4) - PhaseCoefficient::q_quarter_power(-4);
    for (int i = 0; i < 200; ++i) {
        OperatorElement e(2, 1);
        int nm = gen.rint(1, 4);
        for (int j = 0; j < nm; ++j) {
            WeylMonomial m = gen.mono();
            e.add_monomial(m.exp, m.coeff);
        }
        if (e.is_zero()) continue;
        int s = gen.rint(1, 3);
        PhaseCoefficient div;
        switch (gen.rint(0, 2)) {
            case 0:
                div = PhaseCoefficient::q_quarter_power(4 * s) -
                      PhaseCoefficient::q_quarter_power(-4 * s);
                break;
            case 1:
                div = PhaseCoefficient::qt_quarter_power(4 * s) -
                      PhaseCoefficient::qt_quarter_power(-4 * s);
                break;
            default:
                div = PhaseCoefficient::unit(gen.rint(-4, 4), gen.rint(-4, 4), gen.rint(0, 7));
        }
        CHECK((div * e).divide_exact(div) == e);
    }

    OperatorElement m = OperatorElement::monomial(gen.mono());
    CHECK(m.divide_exact(PhaseCoefficient::one()) == m);
    CHECK((qmqi * m).divide_exact(qmqi) == m);
    CHECK_THROWS_AS(m.divide_exact(qmqi), NotDivisible);
    CHECK_THROWS_AS(m.divide_exact(PhaseCoefficient::zero()), NotDivisible);
}

TEST_CASE("substitute_dual is an involution that swaps gradings") {
    Gen gen;
    for (int i = 0; i < 50; ++i) {
        OperatorElement e(2, 1);
        for (int j = 0; j < 3; ++j) {
            WeylMonomial m = gen.mono();
            e.add_monomial(m.exp, m.coeff);
        }
        CHECK(e.substitute_dual().substitute_dual() == e);
    }
    CHECK(PhaseCoefficient::unit(2, 0, 0).dual() == PhaseCoefficient::unit(0, 2, 0));

    // plain blocks move to tilde blocks
    Exponents e(2, 1);
    e.xi(0) = 3;
    e.eta(1) = -1;
    e.nu(0) = 2;
    Exponents d = e.dual();
    CHECK(d.xit(0) == 3);
    CHECK(d.etat(1) == -1);
    CHECK(d.nut(0) == 2);
    CHECK(d.xi(0) == 0);
}

TEST_CASE("deterministic serialization golden strings") {
    OperatorElement U(1, 0), V(1, 0);
    Exponents eu(1, 0), ev(1, 0);
    eu.xi(0) = 2;
    ev.eta(0) = 2;
    U.add_monomial(eu, PhaseCoefficient::one());
    V.add_monomial(ev, PhaseCoefficient::one());
    OperatorElement sq = (U + V) * (U + V);
    CHECK(sq.str() ==
          "xi=(0) eta=(4) nu=() xi~=(0) eta~=(0) nu~=() :: (0,0,0)*[1]\n"
          "xi=(2) eta=(2) nu=() xi~=(0) eta~=(0) nu~=() :: (-4,0,0)*[1] + (4,0,0)*[1]\n"
          "xi=(4) eta=(0) nu=() xi~=(0) eta~=(0) nu~=() :: (0,0,0)*[1]");
    CHECK(PhaseCoefficient::unit(0, 0, 3).str() == "(0,0,1)*[i]");
    CHECK((PhaseCoefficient::integer(2) - PhaseCoefficient::unit(0, 0, 4)).str() ==
          "(0,0,0)*[3]");
}
