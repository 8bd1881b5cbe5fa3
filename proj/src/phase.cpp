#include "qdilog/phase.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qdilog/errors.hpp"

namespace qdilog {

void PhaseCoefficient::insert(Grading g, const Zeta8& z) {
    if (z.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                               [](const auto& t, const Grading& key) { return t.first < key; });
    if (it != terms_.end() && it->first == g) {
        it->second = it->second + z;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, {g, z});
    }
}

PhaseCoefficient operator+(const PhaseCoefficient& x, const PhaseCoefficient& y) {
    PhaseCoefficient r = x;
    for (const auto& [g, z] : y.terms_) r.insert(g, z);
    return r;
}

PhaseCoefficient operator-(const PhaseCoefficient& x, const PhaseCoefficient& y) {
    PhaseCoefficient r = x;
    for (const auto& [g, z] : y.terms_) r.insert(g, -z);
    return r;
}

PhaseCoefficient operator*(const PhaseCoefficient& x, const PhaseCoefficient& y) {
    PhaseCoefficient r;
    for (const auto& [gx, zx] : x.terms_)
        for (const auto& [gy, zy] : y.terms_)
            r.insert(PhaseCoefficient::Grading{gx.a + gy.a, gx.c + gy.c}, zx * zy);
    return r;
}

PhaseCoefficient PhaseCoefficient::operator-() const {
    PhaseCoefficient r;
    r.terms_.reserve(terms_.size());
    for (const auto& [g, z] : terms_) r.terms_.push_back({g, -z});
    return r;
}

PhaseCoefficient PhaseCoefficient::dual() const {
    PhaseCoefficient r;
    for (const auto& [g, z] : terms_) r.insert(Grading{g.c, g.a}, z);
    return r;
}

bool PhaseCoefficient::is_unit_phase() const {
    if (terms_.size() != 1) return false;
    const Zeta8& z = terms_[0].second;
    // either c0 or c1 alone, with value in {1, -1, i, -i}
    auto is_root4 = [](const GaussianRational& g) {
        Rational n2 = g.re * g.re + g.im * g.im;
        return n2 == Rational(1);
    };
    if (z.c1.is_zero()) return is_root4(z.c0);
    if (z.c0.is_zero()) return is_root4(z.c1);
    return false;
}

bool PhaseCoefficient::is_plus_minus_one() const {
    if (terms_.size() != 1) return false;
    if (!(terms_[0].first == Grading{0, 0})) return false;
    const Zeta8& z = terms_[0].second;
    if (!z.c1.is_zero()) return false;
    return z.c0 == GaussianRational{Rational(1), Rational(0)} ||
           z.c0 == GaussianRational{Rational(-1), Rational(0)};
}

PhaseCoefficient PhaseCoefficient::unit_inverse() const {
    if (terms_.size() != 1)
        throw NotDivisible("unit_inverse: coefficient is not a single term");
    const auto& [g, z] = terms_[0];
    PhaseCoefficient r;
    r.insert(Grading{-g.a, -g.c}, Zeta8(1) / z);
    return r;
}

namespace {

// Terms regrouped as a Laurent polynomial in one grading slot, with
// coefficients that are themselves phase coefficients in the other slot.
using Slices = std::map<int, std::map<int, Zeta8>>;

Slices slice(const PhaseCoefficient& p, bool major_is_a) {
    Slices s;
    for (const auto& [g, z] : p.terms()) {
        int maj = major_is_a ? g.a : g.c;
        int min = major_is_a ? g.c : g.a;
        s[maj][min] = z;
    }
    return s;
}

// One-variable Laurent long division with coefficients in the field
// Q(zeta_8): used when the divisor involves only one grading slot.
std::optional<std::map<int, Zeta8>> divide_1var(const std::map<int, Zeta8>& p,
                                                const std::map<int, Zeta8>& d) {
    std::map<int, Zeta8> q;
    std::map<int, Zeta8> r = p;
    const auto lead = std::prev(d.end());
    const int lo_bound = p.begin()->first - d.begin()->first;
    while (!r.empty()) {
        auto rl = std::prev(r.end());
        int deg = rl->first - lead->first;
        if (deg < lo_bound) return std::nullopt;
        Zeta8 coef = rl->second / lead->second;
        q[deg] = coef;
        for (const auto& [e, z] : d) {
            auto it = r.find(e + deg);
            Zeta8 nv = (it == r.end() ? Zeta8() : it->second) - coef * z;
            if (nv.is_zero()) {
                if (it != r.end()) r.erase(it);
            } else {
                r[e + deg] = nv;
            }
        }
    }
    return q;
}

}  // namespace

std::optional<PhaseCoefficient> PhaseCoefficient::divide_exact(const PhaseCoefficient& d) const {
    if (d.is_zero()) throw NotDivisible("divide_exact: zero divisor");
    if (is_zero()) return zero();

    if (d.terms_.size() == 1) return *this * d.unit_inverse();

    // Divisors arising from the algebra (q^s - q^{-s} and its dual) live in
    // a single grading slot; divide slice by slice in the other slot.
    bool pure_a = true, pure_c = true;
    for (const auto& [g, z] : d.terms_) {
        (void)z;
        if (g.c != d.terms_[0].first.c) pure_a = false;
        if (g.a != d.terms_[0].first.a) pure_c = false;
    }
    if (!pure_a && !pure_c) throw NotDivisible("divide_exact: divisor mixes both grading slots");

    const bool major_is_a = pure_a;  // divisor varies along the major slot
    const int off = major_is_a ? d.terms_[0].first.c : d.terms_[0].first.a;

    std::map<int, Zeta8> dslice;
    for (const auto& [g, z] : d.terms_) dslice[major_is_a ? g.a : g.c] = z;

    Slices ps = slice(*this, !major_is_a);  // group by the slot the divisor ignores
    Slices out;
    for (const auto& [minor, poly] : ps) {
        auto q = divide_1var(poly, dslice);
        if (!q) return std::nullopt;
        if (!q->empty()) out[minor - off] = *q;
    }
    // out is keyed (minor slot) -> poly in major slot; rebuild accordingly.
    PhaseCoefficient r;
    for (const auto& [minor, poly] : out)
        for (const auto& [maj, z] : poly) {
            int a = major_is_a ? maj : minor;
            int c = major_is_a ? minor : maj;
            r += unit(a, c, 0, z);
        }
    return r;
}

std::complex<double> PhaseCoefficient::evaluate(double b) const {
    const double b2 = b * b;
    const double pi = 3.14159265358979323846;
    const std::complex<double> omega = std::exp(std::complex<double>(0.0, pi / 4.0));
    std::complex<double> sum = 0.0;
    for (const auto& [g, z] : terms_) {
        std::complex<double> s0(z.c0.re.to_double(), z.c0.im.to_double());
        std::complex<double> s1(z.c1.re.to_double(), z.c1.im.to_double());
        std::complex<double> ph = std::exp(std::complex<double>(0.0, pi * (g.a * b2 + g.c / b2) / 4.0));
        sum += (s0 + s1 * omega) * ph;
    }
    return sum;
}

std::string PhaseCoefficient::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [g, z] : terms_) {
        for (int d = 0; d <= 1; ++d) {
            const GaussianRational& comp = d == 0 ? z.c0 : z.c1;
            if (comp.is_zero()) continue;
            if (!first) s += " + ";
            first = false;
            s += "(" + std::to_string(g.a) + "," + std::to_string(g.c) + "," + std::to_string(d) +
                 ")*[" + comp.str() + "]";
        }
    }
    return s;
}

}  // namespace qdilog
