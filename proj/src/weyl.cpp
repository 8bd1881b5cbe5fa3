#include "qdilog/weyl.hpp"

#include <algorithm>

#include "qdilog/errors.hpp"

namespace qdilog {

bool Exponents::is_identity() const {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

Exponents Exponents::operator+(const Exponents& o) const {
    if (nvars != o.nvars || npars != o.npars)
        throw DimensionMismatch("Exponents: incompatible dimensions");
    Exponents r = *this;
    for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
    return r;
}

Exponents Exponents::operator-() const {
    Exponents r = *this;
    for (auto& x : r.v) x = -x;
    return r;
}

Exponents Exponents::dual() const {
    Exponents r(nvars, npars);
    const int blk = block();
    for (int i = 0; i < blk; ++i) {
        r.v[std::size_t(i)] = v[std::size_t(blk + i)];
        r.v[std::size_t(blk + i)] = v[std::size_t(i)];
    }
    return r;
}

namespace {
std::string vec_str(const std::vector<int>& v, std::size_t from, std::size_t n) {
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) s += ",";
        s += std::to_string(v[from + i]);
    }
    return s + ")";
}
}  // namespace

std::string Exponents::str() const {
    const std::size_t nv = std::size_t(nvars), np = std::size_t(npars), blk = std::size_t(block());
    std::string s;
    s += "xi=" + vec_str(v, 0, nv);
    s += " eta=" + vec_str(v, nv, nv);
    s += " nu=" + vec_str(v, 2 * nv, np);
    s += " xi~=" + vec_str(v, blk, nv);
    s += " eta~=" + vec_str(v, blk + nv, nv);
    s += " nu~=" + vec_str(v, blk + 2 * nv, np);
    return s;
}

SymplecticPairing symplectic(const Exponents& x, const Exponents& y) {
    if (x.nvars != y.nvars || x.npars != y.npars)
        throw DimensionMismatch("symplectic: incompatible dimensions");
    SymplecticPairing s;
    for (int k = 0; k < x.nvars; ++k) {
        s.bb += long(x.xi(k)) * y.eta(k) - long(x.eta(k)) * y.xi(k);
        s.tt += long(x.xit(k)) * y.etat(k) - long(x.etat(k)) * y.xit(k);
        s.cross += long(x.xi(k)) * y.etat(k) - long(x.eta(k)) * y.xit(k) +
                   long(x.xit(k)) * y.eta(k) - long(x.etat(k)) * y.xi(k);
    }
    return s;
}

WeylMonomial mono_mul(const WeylMonomial& m1, const WeylMonomial& m2) {
    SymplecticPairing s = symplectic(m1.exp, m2.exp);
    PhaseCoefficient bch = PhaseCoefficient::unit(int(s.bb), int(s.tt), s.cross);
    return WeylMonomial{m1.exp + m2.exp, m1.coeff * m2.coeff * bch};
}

OperatorElement OperatorElement::monomial(const WeylMonomial& m) {
    OperatorElement e(m.exp.nvars, m.exp.npars);
    e.add_monomial(m.exp, m.coeff);
    return e;
}

void OperatorElement::add_monomial(const Exponents& e, const PhaseCoefficient& c) {
    if (c.is_zero()) return;
    if (e.nvars != nvars_ || e.npars != npars_)
        throw DimensionMismatch("OperatorElement: incompatible dimensions");
    auto it = monos_.find(e);
    if (it == monos_.end()) {
        monos_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) monos_.erase(it);
    }
}

void OperatorElement::check_dims(const OperatorElement& o) const {
    if (nvars_ != o.nvars_ || npars_ != o.npars_)
        throw DimensionMismatch("OperatorElement: incompatible dimensions");
}

OperatorElement operator+(const OperatorElement& x, const OperatorElement& y) {
    x.check_dims(y);
    OperatorElement r = x;
    for (const auto& [e, c] : y.monos_) r.add_monomial(e, c);
    return r;
}

OperatorElement operator-(const OperatorElement& x, const OperatorElement& y) {
    x.check_dims(y);
    OperatorElement r = x;
    for (const auto& [e, c] : y.monos_) r.add_monomial(e, -c);
    return r;
}

OperatorElement OperatorElement::operator-() const {
    OperatorElement r(nvars_, npars_);
    for (const auto& [e, c] : monos_) r.monos_.emplace(e, -c);
    return r;
}

OperatorElement operator*(const OperatorElement& x, const OperatorElement& y) {
    x.check_dims(y);
    OperatorElement r(x.nvars_, x.npars_);
    for (const auto& [e1, c1] : x.monos_)
        for (const auto& [e2, c2] : y.monos_) {
            WeylMonomial m = mono_mul(WeylMonomial{e1, c1}, WeylMonomial{e2, c2});
            r.add_monomial(m.exp, m.coeff);
        }
    return r;
}

OperatorElement operator*(const PhaseCoefficient& s, const OperatorElement& x) {
    OperatorElement r(x.nvars(), x.npars());
    for (const auto& [e, c] : x.monomials()) r.add_monomial(e, s * c);
    return r;
}

OperatorElement commutator(const OperatorElement& x, const OperatorElement& y) {
    return x * y - y * x;
}

OperatorElement OperatorElement::divide_exact(const PhaseCoefficient& divisor) const {
    OperatorElement r(nvars_, npars_);
    for (const auto& [e, c] : monos_) {
        auto q = c.divide_exact(divisor);
        if (!q) throw NotDivisible("divide_exact: monomial coefficient not divisible");
        r.add_monomial(e, *q);
    }
    return r;
}

OperatorElement OperatorElement::substitute_dual() const {
    OperatorElement r(nvars_, npars_);
    for (const auto& [e, c] : monos_) r.add_monomial(e.dual(), c.dual());
    return r;
}

OperatorElement OperatorElement::inverse_monomial() const {
    if (monos_.size() != 1)
        throw NotDivisible("inverse_monomial: element is not a single monomial");
    const auto& [e, c] = *monos_.begin();
    OperatorElement r(nvars_, npars_);
    r.add_monomial(-e, c.unit_inverse());
    return r;
}

std::string OperatorElement::str() const {
    if (monos_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : monos_) {
        if (!s.empty()) s += "\n";
        s += e.str() + " :: " + c.str();
    }
    return s;
}

}  // namespace qdilog
