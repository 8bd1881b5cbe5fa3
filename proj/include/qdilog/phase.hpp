#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdilog/rational.hpp"

namespace qdilog {

// Exact scalar of the operator algebra: a finite sum of terms
//
//     z * e^{i pi (a b^2 + c b^{-2}) / 4},    z in Q(zeta_8), a, c integers.
//
// Keeping (a, c) symbolic makes every relation check an identity in
// q = e^{i pi b^2} and q~ = e^{i pi b^{-2}} rather than a float comparison.
// The d-slot of the grading (integer multiples of e^{i pi/4}) is folded into
// the Q(zeta_8) scalar, which is what makes numerically equal phases compare
// equal structurally (e.g. e^{i pi} and e^{-i pi} from opposite-order
// products).
class PhaseCoefficient {
  public:
    struct Grading {
        int a = 0;  // quarter-units of b^2 in the exponent
        int c = 0;  // quarter-units of b^{-2}
        friend bool operator==(const Grading& x, const Grading& y) {
            return x.a == y.a && x.c == y.c;
        }
        friend bool operator<(const Grading& x, const Grading& y) {
            if (x.a != y.a) return x.a < y.a;
            return x.c < y.c;
        }
    };

    PhaseCoefficient() = default;

    static PhaseCoefficient zero() { return {}; }
    static PhaseCoefficient one() { return unit(0, 0, 0); }

    // scalar * e^{i pi (a b^2 + c b^{-2} + d) / 4}
    static PhaseCoefficient unit(int a, int c, long d, Zeta8 scalar = Zeta8(1)) {
        PhaseCoefficient p;
        Zeta8 s = scalar * Zeta8::root_power(d);
        if (!s.is_zero()) p.terms_.push_back({Grading{a, c}, s});
        return p;
    }

    static PhaseCoefficient scalar(Zeta8 s) { return unit(0, 0, 0, s); }
    static PhaseCoefficient integer(std::int64_t n) { return scalar(Zeta8(n)); }

    // q^{k/4} and q~^{k/4}; q itself is quarter-grading 4.
    static PhaseCoefficient q_quarter_power(int k) { return unit(k, 0, 0); }
    static PhaseCoefficient qt_quarter_power(int k) { return unit(0, k, 0); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // True when the coefficient is a single term with scalar a root of unity
    // (the "unit phase" shape that witnesses positivity of a monomial).
    bool is_unit_phase() const;

    // True when the coefficient equals +1 or -1 times the trivial grading.
    bool is_plus_minus_one() const;

    const std::vector<std::pair<Grading, Zeta8>>& terms() const { return terms_; }

    friend PhaseCoefficient operator+(const PhaseCoefficient& x, const PhaseCoefficient& y);
    friend PhaseCoefficient operator-(const PhaseCoefficient& x, const PhaseCoefficient& y);
    friend PhaseCoefficient operator*(const PhaseCoefficient& x, const PhaseCoefficient& y);
    PhaseCoefficient operator-() const;
    PhaseCoefficient& operator+=(const PhaseCoefficient& y) { return *this = *this + y; }
    PhaseCoefficient& operator*=(const PhaseCoefficient& y) { return *this = *this * y; }

    friend bool operator==(const PhaseCoefficient& x, const PhaseCoefficient& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const PhaseCoefficient& x, const PhaseCoefficient& y) {
        return !(x == y);
    }

    // Swap the b^2 and b^{-2} grading slots (the b <-> b^{-1} substitution).
    PhaseCoefficient dual() const;

    // Multiplicative inverse; only defined for single-term coefficients.
    PhaseCoefficient unit_inverse() const;

    // Exact quotient in the Laurent ring Q(zeta_8)[q^{1/4}, q~^{1/4}]^{+-};
    // nullopt when *this is not divisible by d.
    std::optional<PhaseCoefficient> divide_exact(const PhaseCoefficient& d) const;

    // Numeric value at a concrete b.
    std::complex<double> evaluate(double b) const;

    // Deterministic text form: terms sorted by grading, each Q(zeta_8)
    // scalar split into its d=0 and d=1 components so every printed term
    // is (a,c,d) with a Gaussian-rational scalar.
    std::string str() const;

  private:
    void insert(Grading g, const Zeta8& z);

    // sorted by Grading, no zero scalars
    std::vector<std::pair<Grading, Zeta8>> terms_;
};

}  // namespace qdilog
