#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdilog/phase.hpp"

namespace qdilog {

// Integer exponent data of a single Weyl-type exponential
//
//   e^{ pi b  (xi.u  + eta.p  + nu.lambda)
//     + pi/b  (xi~.u + eta~.p + nu~.lambda) }
//
// over nvars position/momentum pairs (u_k, p_k) and npars central
// parameters lambda_k, with p_k = (1/2 pi i) d/du_k.
struct Exponents {
    int nvars = 0;
    int npars = 0;
    // layout: xi | eta | nu | xi~ | eta~ | nu~
    std::vector<int> v;

    Exponents() = default;
    Exponents(int nv, int np) : nvars(nv), npars(np), v(std::size_t(2 * (2 * nv + np)), 0) {}

    int block() const { return 2 * nvars + npars; }
    int& xi(int k) { return v[std::size_t(k)]; }
    int& eta(int k) { return v[std::size_t(nvars + k)]; }
    int& nu(int k) { return v[std::size_t(2 * nvars + k)]; }
    int& xit(int k) { return v[std::size_t(block() + k)]; }
    int& etat(int k) { return v[std::size_t(block() + nvars + k)]; }
    int& nut(int k) { return v[std::size_t(block() + 2 * nvars + k)]; }
    int xi(int k) const { return v[std::size_t(k)]; }
    int eta(int k) const { return v[std::size_t(nvars + k)]; }
    int nu(int k) const { return v[std::size_t(2 * nvars + k)]; }
    int xit(int k) const { return v[std::size_t(block() + k)]; }
    int etat(int k) const { return v[std::size_t(block() + nvars + k)]; }
    int nut(int k) const { return v[std::size_t(block() + 2 * nvars + k)]; }

    bool is_identity() const;
    Exponents operator+(const Exponents& o) const;
    Exponents operator-() const;
    // swap plain and tilde blocks
    Exponents dual() const;

    friend bool operator==(const Exponents& x, const Exponents& y) { return x.v == y.v; }
    friend bool operator<(const Exponents& x, const Exponents& y) { return x.v < y.v; }

    std::string str() const;
};

struct WeylMonomial {
    Exponents exp;
    PhaseCoefficient coeff;

    WeylMonomial() = default;
    WeylMonomial(Exponents e, PhaseCoefficient c) : exp(std::move(e)), coeff(std::move(c)) {}
};

// Symplectic pairings of two exponent sets; these fix the central
// commutator [A,B] = (i pi / 2)(b^2 sigma_bb + b^{-2} sigma_tt + sigma_cross)
// of the exponents, from [u_k, p_k] = i / (2 pi).
struct SymplecticPairing {
    long bb = 0;
    long tt = 0;
    long cross = 0;
};
SymplecticPairing symplectic(const Exponents& x, const Exponents& y);

// Weyl product of symmetrized exponentials:
//   m1 * m2 = e^{[A,B]/2} * combined,
// i.e. the phase picks up grading increments (sigma_bb, sigma_tt) and the
// eighth-root factor zeta_8^{sigma_cross}.
WeylMonomial mono_mul(const WeylMonomial& m1, const WeylMonomial& m2);

// Finite sum of Weyl monomials in canonical form: monomials keyed and
// ordered by their exponent vectors, no zero coefficients stored.
class OperatorElement {
  public:
    OperatorElement() = default;
    OperatorElement(int nvars, int npars) : nvars_(nvars), npars_(npars) {}

    static OperatorElement monomial(const WeylMonomial& m);

    int nvars() const { return nvars_; }
    int npars() const { return npars_; }
    bool is_zero() const { return monos_.empty(); }
    std::size_t monomial_count() const { return monos_.size(); }
    const std::map<Exponents, PhaseCoefficient>& monomials() const { return monos_; }

    void add_monomial(const Exponents& e, const PhaseCoefficient& c);

    friend OperatorElement operator+(const OperatorElement& x, const OperatorElement& y);
    friend OperatorElement operator-(const OperatorElement& x, const OperatorElement& y);
    friend OperatorElement operator*(const OperatorElement& x, const OperatorElement& y);
    OperatorElement operator-() const;
    OperatorElement& operator+=(const OperatorElement& y) { return *this = *this + y; }

    // scale by an exact phase coefficient
    friend OperatorElement operator*(const PhaseCoefficient& s, const OperatorElement& x);

    friend bool operator==(const OperatorElement& x, const OperatorElement& y) {
        return x.nvars_ == y.nvars_ && x.npars_ == y.npars_ && x.monos_ == y.monos_;
    }
    friend bool operator!=(const OperatorElement& x, const OperatorElement& y) { return !(x == y); }

    // e * divisor^{-1}, exact; throws NotDivisible when no quotient exists.
    OperatorElement divide_exact(const PhaseCoefficient& divisor) const;

    // b <-> b^{-1}: swaps exponent blocks and the (a, c) grading slots.
    OperatorElement substitute_dual() const;

    // inverse of a single unit-phase monomial
    OperatorElement inverse_monomial() const;

    std::string str() const;

  private:
    void check_dims(const OperatorElement& o) const;

    int nvars_ = 0;
    int npars_ = 0;
    std::map<Exponents, PhaseCoefficient> monos_;
};

OperatorElement commutator(const OperatorElement& x, const OperatorElement& y);

}  // namespace qdilog
